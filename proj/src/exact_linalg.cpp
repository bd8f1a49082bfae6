#include "hodge/exact_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace hodge {

RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    RatMatrix out = rat_zeros(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

RatMatrix rat_transpose(const RatMatrix& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    RatMatrix out = rat_zeros(m, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
    return out;
}

size_t rat_rank(RatMatrix a) {
    size_t n = a.size();
    if (n == 0) return 0;
    size_t m = a[0].size(), rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        Rational d = a[rank][col];
        for (size_t j = col; j < m; ++j) a[rank][j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < m; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<RatVector> rat_kernel_basis(const RatMatrix& a0) {
    RatMatrix a = a0;
    size_t n = a.size();
    size_t m = n == 0 ? 0 : a[0].size();
    if (n == 0 || m == 0) {
        // kernel is the whole domain
        std::vector<RatVector> basis;
        for (size_t j = 0; j < m; ++j) {
            RatVector e(m, Rational(0));
            e[j] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    std::vector<int> pivot_of_col(m, -1);
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        Rational d = a[rank][col];
        for (size_t j = col; j < m; ++j) a[rank][j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < m; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<RatVector> basis;
    for (size_t j = 0; j < m; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        RatVector v(m, Rational(0));
        v[j] = 1;
        for (size_t col = 0; col < m; ++col)
            if (pivot_of_col[col] >= 0) v[col] = -a[pivot_of_col[col]][j];
        basis.push_back(v);
    }
    return basis;
}

std::optional<RatVector> rat_solve(RatMatrix a, RatVector b) {
    size_t n = a.size();
    size_t m = n == 0 ? 0 : a[0].size();
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        std::swap(b[piv], b[rank]);
        Rational d = a[rank][col];
        for (size_t j = col; j < m; ++j) a[rank][j] /= d;
        b[rank] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < m; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    for (size_t i = rank; i < n; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVector x(m, Rational(0));
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

size_t gf2_rank(std::vector<std::vector<uint8_t>> a) {
    size_t n = a.size();
    if (n == 0) return 0;
    size_t m = a[0].size(), rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && !a[piv][col]) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || !a[i][col]) continue;
            for (size_t j = col; j < m; ++j) a[i][j] ^= a[rank][j];
        }
        ++rank;
    }
    return rank;
}

Lattice lattice_from_columns(const IntMatrix& a) {
    Lattice lat;
    size_t rows = a.size();
    lat.rows = rows;
    size_t cols = rows == 0 ? 0 : a[0].size();
    // working copy, column-major
    std::vector<IntVector> col(cols, IntVector(rows));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) col[j][i] = a[i][j];

    std::vector<IntVector> basis;
    std::vector<size_t> pivots;
    size_t row = 0, active = cols;
    std::vector<size_t> alive(cols);
    for (size_t j = 0; j < cols; ++j) alive[j] = j;
    (void)active;
    std::vector<IntVector> work;
    for (size_t j = 0; j < cols; ++j) work.push_back(col[j]);

    for (row = 0; row < rows && !work.empty(); ++row) {
        // gcd-reduce the entries of the current row across columns
        while (true) {
            size_t nz = work.size();
            size_t best = nz;
            for (size_t j = 0; j < nz; ++j)
                if (work[j][row] != 0 &&
                    (best == nz || abs(work[j][row]) < abs(work[best][row])))
                    best = j;
            if (best == nz) break;  // row all zero
            bool reduced_any = false;
            for (size_t j = 0; j < nz; ++j) {
                if (j == best || work[j][row] == 0) continue;
                Int q = work[j][row] / work[best][row];
                if (q != 0) {
                    for (size_t i = 0; i < rows; ++i) work[j][i] -= q * work[best][i];
                }
                if (work[j][row] != 0) reduced_any = true;
            }
            if (!reduced_any) {
                // best is the unique nonzero in this row: it becomes a basis column
                IntVector b = work[best];
                if (b[row] < 0)
                    for (auto& e : b) e = -e;
                basis.push_back(b);
                pivots.push_back(row);
                work.erase(work.begin() + static_cast<long>(best));
                break;
            }
        }
    }
    // remaining columns must be zero vectors
    lat.pivot_rows = pivots;
    lat.basis = IntMatrix(rows, IntVector(basis.size(), Int(0)));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < rows; ++i) lat.basis[i][j] = basis[j][i];
    return lat;
}

bool Lattice::contains(const IntVector& v) const {
    if (v.size() != rows) return false;
    IntVector r = v;
    size_t nb = pivot_rows.size();
    for (size_t j = 0; j < nb; ++j) {
        size_t pr = pivot_rows[j];
        // columns are echelon in the pivot rows: earlier columns have zero
        // entries at later pivot rows only if fully reduced; do forward elim.
        Int piv = basis[pr][j];
        if (piv == 0) continue;
        if (r[pr] % piv != 0) {
            // try continue: no other column can fix row pr (echelon)
            return false;
        }
        Int q = r[pr] / piv;
        if (q != 0)
            for (size_t i = 0; i < rows; ++i) r[i] -= q * basis[i][j];
    }
    for (const auto& e : r)
        if (e != 0) return false;
    return true;
}

namespace {

void coset_dfs(const Lattice& lat, const IntVector& v, const RatVector& w,
               size_t j, IntVector& y, const Rational& upper, Rational& best) {
    size_t rows = lat.rows;
    if (j == lat.pivot_rows.size()) {
        Rational s = 0;
        for (size_t i = 0; i < rows; ++i) {
            Int e = v[i] + y[i];
            s += w[i] * Rational(abs(e));
        }
        if (s < best) best = s;
        return;
    }
    size_t pr = lat.pivot_rows[j];
    Int piv = lat.basis[pr][j];
    // bound: w[pr] * |v[pr] + y[pr] + piv*c| <= upper  (necessary for optimum)
    // => |v[pr] + y[pr] + piv*c| <= upper / w[pr]
    Rational cap = upper / w[pr];
    Int capz = numerator(cap) / denominator(cap);  // floor for positive cap
    Int base = v[pr] + y[pr];
    // piv*c in [-capz - base, capz - base]
    Int clo = (-capz - base) / piv, chi = (capz - base) / piv;
    if (clo > chi) std::swap(clo, chi);
    // widen by one to be safe against division truncation
    clo -= 1;
    chi += 1;
    for (Int c = clo; c <= chi; ++c) {
        Int e = base + piv * c;
        if (w[pr] * Rational(abs(e)) > upper) continue;
        IntVector y2 = y;
        if (c != 0)
            for (size_t i = 0; i < rows; ++i) y2[i] += c * lat.basis[i][j];
        coset_dfs(lat, v, w, j + 1, y2, upper, best);
    }
}

}  // namespace

Rational lattice_coset_min_weighted_l1(const Lattice& lat, const IntVector& v,
                                       const RatVector& w) {
    Rational best = 0;
    for (size_t i = 0; i < lat.rows; ++i) best += w[i] * Rational(abs(v[i]));
    if (lat.pivot_rows.empty()) return best;
    IntVector y(lat.rows, Int(0));
    coset_dfs(lat, v, w, 0, y, best, best);
    return best;
}

// ---------------------------------------------------------------------------
// Bounded-variable simplex.

namespace {

struct Tableau {
    // standard-form data after shifting variables to lo = 0 where finite
    RatMatrix a;
    RatVector b, c, hi;
    std::vector<uint8_t> hi_finite;
};

}  // namespace

LpResult lp_solve(const LpProblem& p) {
    // Convert to: min c.x, A x = b, 0 <= x <= u (possibly infinite u),
    // by substituting x = lo + x' for finite lo, and x = x+ - x- for free vars.
    size_t m = p.a.size();
    size_t n0 = p.c.size();
    std::vector<std::pair<int, int>> var_map;  // (orig index, part: 0 shifted, 1 pos, 2 neg)
    RatVector b = p.b;
    RatMatrix a(m);
    RatVector c, hi;
    std::vector<uint8_t> hif;
    for (size_t i = 0; i < m; ++i) a[i].reserve(n0 + 4);

    for (size_t j = 0; j < n0; ++j) {
        bool lf = p.lo_finite[j], hf = p.hi_finite[j];
        if (lf) {
            if (p.lo[j] != 0)
                for (size_t i = 0; i < m; ++i) b[i] -= p.a[i][j] * p.lo[j];
            for (size_t i = 0; i < m; ++i) a[i].push_back(p.a[i][j]);
            c.push_back(p.c[j]);
            if (hf) {
                hi.push_back(p.hi[j] - p.lo[j]);
                hif.push_back(1);
            } else {
                hi.push_back(0);
                hif.push_back(0);
            }
            var_map.push_back({(int)j, 0});
        } else if (hf) {
            // x <= hi, no lower bound: substitute x = hi - x', x' >= 0
            for (size_t i = 0; i < m; ++i) b[i] -= p.a[i][j] * p.hi[j];
            for (size_t i = 0; i < m; ++i) a[i].push_back(-p.a[i][j]);
            c.push_back(-p.c[j]);
            hi.push_back(0);
            hif.push_back(0);
            var_map.push_back({(int)j, 3});
        } else {
            for (size_t i = 0; i < m; ++i) a[i].push_back(p.a[i][j]);
            c.push_back(p.c[j]);
            hi.push_back(0);
            hif.push_back(0);
            var_map.push_back({(int)j, 1});
            for (size_t i = 0; i < m; ++i) a[i].push_back(-p.a[i][j]);
            c.push_back(-p.c[j]);
            hi.push_back(0);
            hif.push_back(0);
            var_map.push_back({(int)j, 2});
        }
    }
    size_t n = c.size();

    // ensure b >= 0
    for (size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            b[i] = -b[i];
            for (size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
        }

    // Phase 1 with artificial variables.  Variables at upper bound are handled
    // with the standard bounded-simplex flag trick.
    size_t total = n + m;
    RatMatrix T(m, RatVector(total, Rational(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) T[i][j] = a[i][j];
        T[i][n + i] = 1;
    }
    std::vector<size_t> basics(m);
    for (size_t i = 0; i < m; ++i) basics[i] = n + i;
    std::vector<uint8_t> at_upper(total, 0);
    RatVector xb = b;

    auto run_simplex = [&](const RatVector& cost, bool phase1) -> bool {
        // In phase 2, artificial variables are pinned to zero by an upper
        // bound so a degenerate basis cannot push them positive again.
        // returns false if unbounded
        while (true) {
            // reduced costs via basis inverse-free full pricing (small sizes)
            // Solve y^T B = c_B^T by Gaussian elimination each iteration.
            RatMatrix B(m, RatVector(m));
            for (size_t i = 0; i < m; ++i)
                for (size_t k = 0; k < m; ++k) B[i][k] = T[i][basics[k]];
            RatVector cb(m);
            for (size_t k = 0; k < m; ++k) cb[k] = cost[basics[k]];
            auto yt = rat_solve(rat_transpose(B), cb);
            assert(yt.has_value());
            RatVector y = *yt;

            size_t enter = total;
            int enter_dir = 0;  // +1 increase from lower, -1 decrease from upper
            for (size_t j = 0; j < total; ++j) {
                bool is_basic = false;
                for (size_t k = 0; k < m; ++k)
                    if (basics[k] == j) is_basic = true;
                if (is_basic) continue;
                if (phase1 == false && j >= n) continue;  // artificials locked out
                Rational rc = cost[j];
                for (size_t i = 0; i < m; ++i) rc -= y[i] * T[i][j];
                if (!at_upper[j] && rc < 0) {
                    enter = j;
                    enter_dir = 1;
                    break;
                }
                bool has_ub = j < n && hif[j];
                if (at_upper[j] && has_ub && rc > 0) {
                    enter = j;
                    enter_dir = -1;
                    break;
                }
            }
            if (enter == total) return true;  // optimal

            // direction d = B^-1 a_enter
            RatVector ae(m);
            for (size_t i = 0; i < m; ++i) ae[i] = T[i][enter];
            auto dsol = rat_solve(B, ae);
            assert(dsol.has_value());
            RatVector d = *dsol;
            if (enter_dir == -1)
                for (auto& e : d) e = -e;

            // ratio test, including the entering variable's own bound
            Rational best_t;
            bool has_t = false;
            size_t leave = m;
            int leave_kind = 0;  // 0: basic hits lower, 1: basic hits upper, 2: enter hits own bound
            if (enter < n && hif[enter]) {
                best_t = hi[enter];
                has_t = true;
                leave_kind = 2;
            }
            for (size_t i = 0; i < m; ++i) {
                size_t bi = basics[i];
                Rational ub_i = 0;
                bool ub_f;
                if (bi < n) {
                    ub_f = (bool)hif[bi];
                    if (ub_f) ub_i = hi[bi];
                } else {
                    ub_f = !phase1;  // artificials pinned at 0 in phase 2
                }
                if (d[i] > 0) {
                    Rational t = xb[i] / d[i];
                    if (!has_t || t < best_t ||
                        (t == best_t && leave < m && bi < basics[leave])) {
                        best_t = t;
                        has_t = true;
                        leave = i;
                        leave_kind = 0;
                    }
                } else if (d[i] < 0 && ub_f) {
                    Rational t = (xb[i] - ub_i) / d[i];
                    if (!has_t || t < best_t ||
                        (t == best_t && leave < m && bi < basics[leave])) {
                        best_t = t;
                        has_t = true;
                        leave = i;
                        leave_kind = 1;
                    }
                }
            }
            if (!has_t) return false;  // unbounded

            // pivot
            for (size_t i = 0; i < m; ++i) xb[i] -= best_t * d[i];
            if (leave_kind == 2) {
                at_upper[enter] = enter_dir == 1 ? 1 : 0;
            } else {
                size_t lv = basics[leave];
                if (lv < n) at_upper[lv] = leave_kind == 1 ? 1 : 0;
                basics[leave] = enter;
                Rational entval = enter_dir == 1 ? best_t : hi[enter] - best_t;
                if (enter < n && hif[enter] && enter_dir == -1) at_upper[enter] = 0;
                if (enter_dir == 1) at_upper[enter] = 0;
                xb[leave] = entval;
            }
        }
    };

    RatVector phase1_cost(total, Rational(0));
    for (size_t i = 0; i < m; ++i) phase1_cost[n + i] = 1;
    bool ok = run_simplex(phase1_cost, true);
    (void)ok;
    Rational p1 = 0;
    for (size_t i = 0; i < m; ++i)
        if (basics[i] >= n) p1 += xb[i];
    LpResult res;
    if (p1 != 0) {
        res.status = LpResult::Infeasible;
        return res;
    }
    // drive artificials out of the basis if possible; if a row is redundant we
    // leave the artificial at value zero (harmless for optimality).
    RatVector phase2_cost(total, Rational(0));
    for (size_t j = 0; j < n; ++j) phase2_cost[j] = c[j];
    if (!run_simplex(phase2_cost, false)) {
        res.status = LpResult::Unbounded;
        return res;
    }
    RatVector xfull(total, Rational(0));
    for (size_t j = 0; j < n; ++j)
        if (at_upper[j] && hif[j]) xfull[j] = hi[j];
    for (size_t i = 0; i < m; ++i) xfull[basics[i]] = xb[i];

    res.status = LpResult::Optimal;
    res.x.assign(n0, Rational(0));
    for (size_t j = 0; j < n; ++j) {
        auto [orig, part] = var_map[j];
        if (part == 0)
            res.x[orig] = p.lo[orig] + xfull[j];
        else if (part == 1)
            res.x[orig] += xfull[j];
        else if (part == 2)
            res.x[orig] -= xfull[j];
        else
            res.x[orig] = p.hi[orig] - xfull[j];
    }
    res.objective = 0;
    for (size_t j = 0; j < n0; ++j) res.objective += p.c[j] * res.x[j];
    return res;
}

Rational weighted_l1_dist_to_subspace(const RatMatrix& kernel_cols,
                                      const RatVector& v, const RatVector& w) {
    size_t n = v.size();
    size_t r = kernel_cols.empty() ? 0 : kernel_cols[0].size();
    // min sum w_i (u_i + s_i)  s.t.  u - s + K t = v, u,s >= 0, t free
    LpProblem p;
    size_t nv = 2 * n + r;
    p.a = rat_zeros(n, nv);
    p.b = v;
    p.c.assign(nv, Rational(0));
    p.lo.assign(nv, Rational(0));
    p.hi.assign(nv, Rational(0));
    p.lo_finite.assign(nv, 1);
    p.hi_finite.assign(nv, 0);
    for (size_t i = 0; i < n; ++i) {
        p.a[i][i] = 1;
        p.a[i][n + i] = -1;
        p.c[i] = w[i];
        p.c[n + i] = w[i];
        for (size_t j = 0; j < r; ++j) p.a[i][2 * n + j] = kernel_cols[i][j];
    }
    for (size_t j = 0; j < r; ++j) p.lo_finite[2 * n + j] = 0;
    auto res = lp_solve(p);
    if (res.status != LpResult::Optimal)
        throw ContractError("weighted_l1_dist_to_subspace: LP not optimal");
    return res.objective;
}

}  // namespace hodge
