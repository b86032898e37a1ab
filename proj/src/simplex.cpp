#include "monreg/simplex.hpp"

#include <stdexcept>

namespace monreg {

namespace {

// One dense simplex tableau row: structural, slack and artificial columns
// followed by the right-hand side.
using Row = std::vector<Rational>;

}  // namespace

bool rational_feasible(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b,
                       const Rational& s) {
    const std::size_t ineq = A.size();
    if (b.size() != ineq)
        throw std::invalid_argument("rational_feasible: A and b sizes differ");
    const std::size_t nvar = ineq == 0 ? 0 : A.front().size();
    for (const auto& row : A)
        if (row.size() != nvar)
            throw std::invalid_argument("rational_feasible: ragged matrix");
    if (s < 0) return false;  // lambda >= 0 forces sum(lambda) >= 0

    // Standard form: every inequality row gets a slack column, and every row
    // (after normalising its right-hand side to be nonnegative) gets an
    // artificial column.  Phase 1 minimises the sum of the artificials; the
    // system is feasible iff that minimum is zero.
    const std::size_t rows = ineq + 1;  // + the sum(lambda) == s row
    const std::size_t slack_base = nvar;
    const std::size_t art_base = slack_base + ineq;
    const std::size_t cols = art_base + rows;  // structural + slack + artificial
    const std::size_t rhs = cols;

    std::vector<Row> t(rows + 1, Row(cols + 1, Rational(0)));

    for (std::size_t i = 0; i < ineq; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < nvar; ++j)
            t[i][j] = flip ? -A[i][j] : A[i][j];
        t[i][slack_base + i] = flip ? Rational(-1) : Rational(1);
        t[i][art_base + i] = 1;
        t[i][rhs] = flip ? -b[i] : b[i];
    }
    // sum(lambda) == s, with s >= 0 already ensured.
    {
        const std::size_t i = ineq;
        for (std::size_t j = 0; j < nvar; ++j) t[i][j] = 1;
        t[i][art_base + i] = 1;
        t[i][rhs] = s;
    }

    // Basis starts as the artificials.  The objective row holds reduced costs
    // d_j = c_j - sum_i c_B[i] * t[i][j] for cost c = 1 on artificials, and
    // -z in the right-hand cell.
    std::vector<std::size_t> basis(rows);
    Row& obj = t[rows];
    for (std::size_t i = 0; i < rows; ++i) {
        basis[i] = art_base + i;
        for (std::size_t j = 0; j <= cols; ++j) obj[j] -= t[i][j];
    }
    for (std::size_t i = 0; i < rows; ++i) obj[art_base + i] = 0;

    for (;;) {
        // Bland's rule: entering column = lowest index with negative reduced
        // cost.  Guarantees termination without an anti-cycling perturbation.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;  // optimal

        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            throw std::logic_error(
                "rational_feasible: unbounded phase-1 objective");

        // Pivot on (leave, enter).
        const Rational piv = t[leave][enter];
        for (std::size_t j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leave) continue;
            const Rational f = t[i][enter];
            if (f == 0) continue;
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // obj[rhs] holds -z at optimum; feasible iff min sum of artificials is 0.
    return obj[rhs] == 0;
}

}  // namespace monreg
