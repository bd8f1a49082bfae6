#include "hodge/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hodge {

Eigen::VectorXd InnerProduct::to_vector() const {
    Eigen::VectorXd v(weights.size());
    for (size_t i = 0; i < weights.size(); ++i) v[i] = to_double(weights[i]);
    return v;
}

InnerProduct unit_inner_product(const SimplicialComplex& cx, int k) {
    return {k, RatVector(cx.level_size(k), Rational(1))};
}

InnerProduct weight_inner_product(const SimplicialComplex& cx, int k) {
    return {k, cx.level_weights(k)};
}

InnerProduct degree_inner_product(const SimplicialComplex& cx, int k) {
    RatVector w;
    for (const auto& s : cx.level(k)) {
        int d = cx.degree(s);
        w.push_back(d == 0 ? Rational(1) : Rational(d));
    }
    return {k, w};
}

LapVariant parse_variant(const std::string& name) {
    if (name == "up") return LapVariant::Up;
    if (name == "down") return LapVariant::Down;
    if (name == "full") return LapVariant::Full;
    throw ValidationError("unknown laplacian variant: " + name);
}

std::string variant_name(LapVariant v) {
    switch (v) {
        case LapVariant::Up: return "up";
        case LapVariant::Down: return "down";
        default: return "full";
    }
}

std::vector<InnerProduct> default_inner_products(const SimplicialComplex& cx) {
    std::vector<InnerProduct> ips;
    for (int k = 0; k <= cx.dimension(); ++k)
        ips.push_back(weight_inner_product(cx, k));
    return ips;
}

namespace {

RatMatrix up_part(const SimplicialComplex& cx, int k, const RatVector& wk,
                  const RatVector& wk1) {
    size_t nk = cx.level_size(k);
    RatMatrix d = cx.coboundary_matrix_rat(k);  // |S_{k+1}| x |S_k|
    RatMatrix out = rat_zeros(nk, nk);
    for (size_t r = 0; r < d.size(); ++r)
        for (size_t i = 0; i < nk; ++i) {
            if (d[r][i] == 0) continue;
            for (size_t j = 0; j < nk; ++j) {
                if (d[r][j] == 0) continue;
                out[i][j] += d[r][i] * wk1[r] * d[r][j] / wk[i];
            }
        }
    return out;
}

RatMatrix down_part(const SimplicialComplex& cx, int k, const RatVector& wkm1,
                    const RatVector& wk) {
    size_t nk = cx.level_size(k);
    RatMatrix out = rat_zeros(nk, nk);
    if (k == 0) return out;
    RatMatrix d = cx.coboundary_matrix_rat(k - 1);  // |S_k| x |S_{k-1}|
    for (size_t i = 0; i < nk; ++i)
        for (size_t j = 0; j < nk; ++j) {
            Rational acc = 0;
            for (size_t c = 0; c < wkm1.size(); ++c) {
                if (d[i][c] == 0 || d[j][c] == 0) continue;
                acc += d[i][c] * d[j][c] / wkm1[c];
            }
            out[i][j] = acc * wk[j];
        }
    return out;
}

}  // namespace

RatMatrix laplacian_rat(const SimplicialComplex& cx, int k, LapVariant variant,
                        const std::vector<InnerProduct>& ips) {
    if (k < 0 || k > cx.dimension())
        throw ValidationError("laplacian level out of range");
    auto weights_at = [&](int lev) -> RatVector {
        for (const auto& ip : ips)
            if (ip.level == lev) return ip.weights;
        return RatVector(cx.level_size(lev), Rational(1));
    };
    size_t nk = cx.level_size(k);
    RatMatrix out = rat_zeros(nk, nk);
    bool want_up = variant != LapVariant::Down && k < cx.dimension();
    bool want_down = variant != LapVariant::Up && k > 0;
    if (want_up) {
        RatMatrix u = up_part(cx, k, weights_at(k), weights_at(k + 1));
        for (size_t i = 0; i < nk; ++i)
            for (size_t j = 0; j < nk; ++j) out[i][j] += u[i][j];
    }
    if (want_down) {
        RatMatrix dn = down_part(cx, k, weights_at(k - 1), weights_at(k));
        for (size_t i = 0; i < nk; ++i)
            for (size_t j = 0; j < nk; ++j) out[i][j] += dn[i][j];
    }
    return out;
}

RatMatrix normalized_up_laplacian_rat(const SimplicialComplex& cx, int k) {
    if (k < 0 || k > cx.dimension())
        throw ValidationError("level out of range");
    RatVector wk = degree_inner_product(cx, k).weights;
    RatVector wk1(cx.level_size(k + 1), Rational(1));
    return up_part(cx, k, wk, wk1);
}

RatMatrix algebraic_graph_laplacian(const SimplicialComplex& cx) {
    if (cx.dimension() > 1)
        throw ValidationError("algebraic graph laplacian needs a 1-complex");
    size_t n = cx.level_size(0);
    RatMatrix out = rat_zeros(n, n);
    for (const auto& e : cx.level(1)) {
        int i = cx.index_of({e[0]});
        int j = cx.index_of({e[1]});
        Rational w = cx.weight(e);
        out[i][i] += w;
        out[j][j] += w;
        out[i][j] -= w;
        out[j][i] -= w;
    }
    return out;
}

Eigen::MatrixXd rat_to_mat(const RatMatrix& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    Eigen::MatrixXd out(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) out(i, j) = to_double(a[i][j]);
    return out;
}

SpectrumReport eigendecomposition(const Eigen::MatrixXd& lap,
                                  const Eigen::VectorXd& w) {
    SpectrumReport rep;
    const auto n = lap.rows();
    if (n == 0) return rep;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (!(w[i] > 0)) throw ContractError("inner product weights must be positive");

    Eigen::VectorXd sq = w.array().sqrt();
    Eigen::MatrixXd sym = sq.asDiagonal() * lap * sq.cwiseInverse().asDiagonal();
    double scale = std::max(1.0, sym.cwiseAbs().maxCoeff());
    double asym = (sym - sym.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw ContractError("matrix is not self-adjoint in the given product");
    sym = 0.5 * (sym + sym.transpose());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    if (es.info() != Eigen::Success)
        throw ContractError("eigendecomposition failed to converge");
    rep.eigenvalues.assign(es.eigenvalues().data(),
                           es.eigenvalues().data() + n);
    rep.eigenvectors = sq.cwiseInverse().asDiagonal() * es.eigenvectors();
    rep.lambda_max = 0;
    for (double ev : rep.eigenvalues)
        rep.lambda_max = std::max(rep.lambda_max, std::abs(ev));
    double lap_norm = std::max(rep.lambda_max, 1e-300);
    rep.max_residual = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double r = (lap * rep.eigenvectors.col(i) -
                    rep.eigenvalues[i] * rep.eigenvectors.col(i))
                       .norm();
        rep.max_residual = std::max(rep.max_residual, r);
    }
    if (rep.max_residual > 1e-9 * std::max(1.0, lap_norm))
        throw ContractError("eigenpair residual exceeds contract bound");
    double ztol = 1e-8 * std::max(1.0, rep.lambda_max);
    rep.zero_multiplicity = 0;
    for (double ev : rep.eigenvalues)
        if (std::abs(ev) <= ztol) ++rep.zero_multiplicity;
    return rep;
}

SpectrumReport eigendecomposition(const RatMatrix& lap, const InnerProduct& ip) {
    return eigendecomposition(rat_to_mat(lap), ip.to_vector());
}

Eigen::MatrixXd witten_deformed_laplacian(const SimplicialComplex& cx, int k,
                                          const std::map<Simplex, Rational>& f,
                                          double t) {
    if (k < 0 || k > cx.dimension())
        throw ValidationError("level out of range");
    double fmax = 0;
    for (int lev = 0; lev <= cx.dimension(); ++lev)
        for (const auto& s : cx.level(lev)) {
            auto it = f.find(s);
            if (it == f.end())
                throw ValidationError("cell function undefined on a simplex");
            fmax = std::max(fmax, std::abs(to_double(it->second)));
        }
    if (t * fmax > 300.0)
        throw ValidationError("witten deformation would overflow; rescale f or t");

    auto expdiag = [&](int lev, double sgn) {
        Eigen::VectorXd e(cx.level_size(lev));
        size_t i = 0;
        for (const auto& s : cx.level(lev))
            e[i++] = std::exp(sgn * t * to_double(f.at(s)));
        return e;
    };
    auto wdiag = [&](int lev) {
        Eigen::VectorXd w(cx.level_size(lev));
        size_t i = 0;
        for (const auto& s : cx.level(lev)) w[i++] = to_double(cx.weight(s));
        return w;
    };

    size_t nk = cx.level_size(k);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(nk, nk);
    Eigen::VectorXd wk = wdiag(k);
    if (k < cx.dimension()) {
        Eigen::MatrixXd d = rat_to_mat(cx.coboundary_matrix_rat(k));
        Eigen::MatrixXd dt = expdiag(k + 1, -1.0).asDiagonal() * d *
                             expdiag(k, +1.0).asDiagonal();
        Eigen::VectorXd wk1 = wdiag(k + 1);
        h += wk.cwiseInverse().asDiagonal() * dt.transpose() *
             wk1.asDiagonal() * dt;
    }
    if (k > 0) {
        Eigen::MatrixXd d = rat_to_mat(cx.coboundary_matrix_rat(k - 1));
        Eigen::MatrixXd dt = expdiag(k, -1.0).asDiagonal() * d *
                             expdiag(k - 1, +1.0).asDiagonal();
        Eigen::VectorXd wkm1 = wdiag(k - 1);
        h += dt * wkm1.cwiseInverse().asDiagonal() * dt.transpose() *
             wk.asDiagonal();
    }
    return h;
}

std::vector<WittenDiagnostic> witten_diagnostics(
    const SimplicialComplex& cx, int k, const std::map<Simplex, Rational>& f,
    const std::vector<double>& ts) {
    std::vector<WittenDiagnostic> out;
    Eigen::VectorXd w = weight_inner_product(cx, k).to_vector();
    for (double t : ts) {
        Eigen::MatrixXd h = witten_deformed_laplacian(cx, k, f, t);
        auto rep = eigendecomposition(h, w);
        WittenDiagnostic d;
        d.t = t;
        d.eigenvalues = rep.eigenvalues;
        d.kernel_dim = rep.zero_multiplicity;
        // split the positive spectrum at the largest consecutive ratio gap
        d.low_count = rep.zero_multiplicity;
        d.split_value = 0;
        std::vector<double> pos;
        double ztol = 1e-8 * std::max(1.0, rep.lambda_max);
        for (double ev : rep.eigenvalues)
            if (ev > ztol) pos.push_back(ev);
        if (pos.size() >= 2) {
            double best_ratio = 0;
            size_t cut = 0;
            for (size_t i = 0; i + 1 < pos.size(); ++i) {
                double ratio = pos[i + 1] / pos[i];
                if (ratio > best_ratio) {
                    best_ratio = ratio;
                    cut = i + 1;
                }
            }
            if (best_ratio >= 2.0) {
                d.split_value = pos[cut];
                for (double ev : pos)
                    if (ev < 0.5 * d.split_value) ++d.low_count;
            }
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace hodge
