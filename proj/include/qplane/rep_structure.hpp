#pragma once

/// Ring-theoretic structure of H computed intrinsically by exact linear
/// algebra: the left regular representation, the Jacobson radical (kernel of
/// the trace form, cross-checked against both the Grassmann block model and
/// the kernel of the map onto the irreducibles), the block decomposition via
/// lifted central idempotents, the principal indecomposable modules with
/// their submodule chains and the lambda-family of middle submodules, and
/// the intertwiners matching the plane summands to those middle modules.

#include <qplane/decomposition.hpp>
#include <qplane/grassmann.hpp>

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace qplane {

inline int h_dim(int n) { return n * n * n; }
inline int h_index(int n, const HElement::Key& k) {
    return (k[0] * n + k[1]) * n + k[2];
}
inline HElement::Key h_key_of(int n, int idx) {
    return {idx / (n * n), (idx / n) % n, idx % n};
}

inline CycMatrix h_coords(const HElement& u) {
    const int n = u.field()->n();
    CycMatrix row(u.field(), 1, h_dim(n));
    for (const auto& [k, c] : u.terms()) row.at(0, h_index(n, k)) = c;
    return row;
}

inline HElement h_from_coords(const CycFieldPtr& field, const CycMatrix& row) {
    const int n = field->n();
    HElement u(field);
    for (int i = 0; i < h_dim(n); ++i) {
        const CycScalar& c =
            row.rows() == 1 ? row.at(0, i) : row.at(i, 0);
        if (c.is_zero()) continue;
        HElement::Key k = h_key_of(n, i);
        u.add_term(k[0], k[1], k[2], c);
    }
    return u;
}

/// Left-multiplication matrices of the three generators on the monomial
/// basis of H (dimension N^3).
struct RegularRep {
    CycMatrix k, x_plus, x_minus;
};

struct SubmoduleChain {
    int block;     // p of the block M_{N-p|p} this PIM lives in
    int top_dim;   // dimension of the head (and socle) irreducible
    std::vector<int> dims;  // 0 < soc < middle < rad < full (or 0 < N)
    std::optional<std::pair<CycScalar, CycScalar>> lambda;
};

struct MiddleModule {
    std::pair<CycScalar, CycScalar> lambda;
    Subspace space;               // in PIM coordinates
    std::vector<CycMatrix> gens;  // K, X+, X- on `space`
};

struct PimInfo {
    int top_dim;  // k: dim of the simple head; PIM dim is 2N (N when k = N)
    int block;    // p = min(k, N-k)
    HElement idempotent;
    Subspace space;               // left ideal He inside H (N^3 coordinates)
    std::vector<CycMatrix> gens;  // K, X+, X- on `space`
    Subspace socle, radical;      // in `space` coordinates (empty for k = N)
    std::vector<MiddleModule> middles;  // lambda samples (empty for k = N)
    std::vector<int> chain_dims;

    // middle-family data (empty for k = N): rows of `hom_basis` are the two
    // independent module maps from the (N-k)-dim irreducible into rad/soc,
    // flattened; rows of `ext_basis` are the socle basis followed by a
    // complement basis of rad, so tail coordinates are rad/soc coordinates
    CycMatrix hom_basis;
    CycMatrix ext_basis;
};

struct BlockInfo {
    BlockShape shape;
    HElement idempotent;  // central, primitive in the center
    long dimension;       // computed dim of H * idempotent
};

/// The middle submodule soc + image of (l1 F1 + l2 F2) for one projective
/// parameter value, with the generator action restricted to it.
inline MiddleModule middle_module(const CycFieldPtr& field, const PimInfo& pim,
                                  const std::pair<CycScalar, CycScalar>& lambda) {
    const int k = pim.top_dim;
    const int dp = pim.space.dim();
    const int m = (pim.ext_basis.rows() - k) / 2;
    MiddleModule mid;
    mid.lambda = lambda;
    CycMatrix rows(field, k + m, dp);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < dp; ++j) rows.at(i, j) = pim.socle.basis().at(i, j);
    for (int al = 0; al < m; ++al)
        for (int i = 0; i < 2 * m; ++i) {
            CycScalar f = lambda.first * pim.hom_basis.at(0, i * m + al) +
                          lambda.second * pim.hom_basis.at(1, i * m + al);
            if (f.is_zero()) continue;
            for (int j = 0; j < dp; ++j)
                rows.at(k + al, j) += f * pim.ext_basis.at(k + i, j);
        }
    mid.space = Subspace(std::move(rows));
    if (mid.space.dim() != k + m)
        throw std::logic_error("middle submodule has wrong dimension");
    if (!pim.radical.contains(mid.space) || !mid.space.contains(pim.socle))
        throw std::logic_error("middle submodule outside soc..rad range");
    for (const CycMatrix& g : pim.gens)
        mid.gens.push_back(restrict_operator(mid.space, g));
    return mid;
}

struct SummandMatch {
    int label;  // p of the plane summand N_p
    std::optional<std::pair<CycScalar, CycScalar>> lambda;
    CycMatrix intertwiner;  // summand coordinates -> module coordinates
};

namespace detail {

/// Injective T with T A_g = B_g T for all g (a maps from the A-module into
/// the B-module); tries kernel basis elements and small combinations. For
/// modules of equal dimension, injective means invertible.
inline std::optional<CycMatrix> find_intertwiner(
    const CycFieldPtr& field, const std::vector<CycMatrix>& a,
    const std::vector<CycMatrix>& b) {
    const int na = a[0].rows();
    const int nb = b[0].rows();
    CycMatrix sys(field, static_cast<int>(a.size()) * nb * na, nb * na);
    int row = 0;
    for (std::size_t g = 0; g < a.size(); ++g)
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < na; ++j, ++row) {
                // (B_g T - T A_g)[i][j], unknown T[l][m] at index l*na+m
                for (int l = 0; l < nb; ++l)
                    sys.at(row, l * na + j) += b[g].at(i, l);
                for (int l = 0; l < na; ++l)
                    sys.at(row, i * na + l) -= a[g].at(l, j);
            }
    CycMatrix ker = sys.kernel_basis();
    auto reshape = [&](const CycMatrix& combo) {
        CycMatrix t(field, nb, na);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < na; ++j) t.at(i, j) = combo.at(0, i * na + j);
        return t;
    };
    std::vector<CycMatrix> candidates;
    for (int i = 0; i < ker.rows(); ++i) {
        CycMatrix row_i(field, 1, nb * na);
        for (int j = 0; j < nb * na; ++j) row_i.at(0, j) = ker.at(i, j);
        candidates.push_back(row_i);
    }
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        candidates.push_back(candidates[0] + candidates[i]);
        candidates.push_back(candidates[0] + field->q() * candidates[i]);
    }
    for (const auto& cand : candidates) {
        CycMatrix t = reshape(cand);
        if (t.rank() == na) return t;
    }
    return std::nullopt;
}

}  // namespace detail

class HStructure {
  public:
    explicit HStructure(CycFieldPtr field) : field_(std::move(field)) {
        build();
    }

    const CycFieldPtr& field() const { return field_; }
    const RegularRep& regular() const { return reg_; }
    /// Generator matrices of the irreducible of dimension k, k = 1..N.
    const std::vector<CycMatrix>& irrep(int k) const {
        return irreps_.at(static_cast<std::size_t>(k) - 1);
    }
    const Subspace& radical() const { return radical_; }
    const std::vector<HElement>& radical_elements() const {
        return radical_elements_;
    }
    const std::vector<HElement>& center() const { return center_; }
    const std::vector<BlockInfo>& blocks() const { return blocks_; }
    const std::vector<PimInfo>& pims() const { return pims_; }
    const PimInfo& pim(int top_dim) const {
        for (const auto& p : pims_)
            if (p.top_dim == top_dim) return p;
        throw std::invalid_argument("no such PIM");
    }

    std::vector<SubmoduleChain> chains() const {
        std::vector<SubmoduleChain> out;
        for (const auto& p : pims_) {
            SubmoduleChain c{p.block, p.top_dim, p.chain_dims, std::nullopt};
            if (!p.middles.empty()) c.lambda = p.middles.front().lambda;
            out.push_back(std::move(c));
        }
        return out;
    }

  private:
    void build();

    CycFieldPtr field_;
    RegularRep reg_{};
    std::vector<std::vector<CycMatrix>> irreps_;
    std::vector<std::vector<CycMatrix>> rho_mono_;  // [k-1][t], k x k each
    CycMatrix phi_;                                 // (sum k^2) x N^3
    Subspace radical_;
    std::vector<HElement> radical_elements_;
    std::vector<HElement> center_;
    std::vector<BlockInfo> blocks_;
    std::vector<PimInfo> pims_;

    void build_regular();
    void build_irreps();
    void build_radical();
    void build_center_and_blocks();
    void build_pims();
    PimInfo build_pim(int k);
};

inline void HStructure::build_regular() {
    const int n = field_->n();
    const int d = h_dim(n);
    auto lmat = [&](const HElement::Key& g) {
        CycMatrix m(field_, d, d);
        for (int t = 0; t < d; ++t) {
            HElement prod = detail::h_mono_mul(field_, g, h_key_of(n, t));
            for (const auto& [kk, c] : prod.terms())
                m.at(h_index(n, kk), t) = c;
        }
        return m;
    };
    reg_.k = lmat({1, 0, 0});
    reg_.x_plus = lmat({0, 1, 0});
    reg_.x_minus = lmat({0, 0, 1});
}

inline void HStructure::build_irreps() {
    const int n = field_->n();
    Decomposition dec = decompose(field_);
    irreps_.resize(static_cast<std::size_t>(n));
    for (const auto& s : dec.summands) {
        // the invariant subspace of the summand labeled k carries the
        // k-dimensional irreducible; its monomial basis is action-closed
        ModuleSummand restricted = s;
        restricted.basis = s.invariant_basis;
        irreps_[static_cast<std::size_t>(s.label) - 1] =
            restricted.generator_matrices();
    }

    const int d = h_dim(n);
    rho_mono_.resize(static_cast<std::size_t>(n));
    int sumsq = 0;
    for (int k = 1; k <= n; ++k) sumsq += k * k;
    phi_ = CycMatrix(field_, sumsq, d);
    int offset = 0;
    for (int k = 1; k <= n; ++k) {
        const auto& g = irreps_[static_cast<std::size_t>(k) - 1];
        std::vector<CycMatrix> kp{CycMatrix::identity(field_, k)},
            xp{CycMatrix::identity(field_, k)},
            xm{CycMatrix::identity(field_, k)};
        for (int i = 1; i < n; ++i) {
            kp.push_back(kp.back() * g[0]);
            xp.push_back(xp.back() * g[1]);
            xm.push_back(xm.back() * g[2]);
        }
        auto& table = rho_mono_[static_cast<std::size_t>(k) - 1];
        for (int t = 0; t < d; ++t) {
            HElement::Key key = h_key_of(n, t);
            CycMatrix m = kp[static_cast<std::size_t>(key[0])] *
                          xp[static_cast<std::size_t>(key[1])] *
                          xm[static_cast<std::size_t>(key[2])];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    phi_.at(offset + i * k + j, t) = m.at(i, j);
            table.push_back(std::move(m));
        }
        offset += k * k;
    }
}

inline void HStructure::build_radical() {
    const int n = field_->n();
    const int d = h_dim(n);

    // trace of left multiplication by each basis monomial
    std::vector<CycScalar> tr(static_cast<std::size_t>(d), field_->zero());
    for (int t = 0; t < d; ++t) {
        CycScalar acc = field_->zero();
        for (int j = 0; j < d; ++j) {
            HElement::Key kj = h_key_of(n, j);
            HElement prod = detail::h_mono_mul(field_, h_key_of(n, t), kj);
            auto it = prod.terms().find(kj);
            if (it != prod.terms().end()) acc += it->second;
        }
        tr[static_cast<std::size_t>(t)] = acc;
    }

    // Gram matrix of <u, v> = trace(L_u L_v) = trace(L_{uv}); symmetric
    CycMatrix gram(field_, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            HElement prod =
                detail::h_mono_mul(field_, h_key_of(n, i), h_key_of(n, j));
            CycScalar acc = field_->zero();
            for (const auto& [k, c] : prod.terms())
                acc += c * tr[static_cast<std::size_t>(h_index(n, k))];
            gram.at(i, j) = acc;
            gram.at(j, i) = std::move(acc);
        }
    radical_ = Subspace(gram.kernel_basis());

    long predicted = 0;
    for (const BlockShape& s : block_shapes(n)) predicted += s.radical_dimension();
    if (radical_.dim() != predicted)
        throw std::logic_error(
            "trace-form radical disagrees with the block-model prediction");

    // Independent route: the radical is the kernel of the map onto the
    // direct sum of all irreducibles (the semisimple quotient).
    if (Subspace(phi_.kernel_basis()) != radical_)
        throw std::logic_error(
            "trace-form radical differs from the kernel of the "
            "semisimple-quotient map");

    for (int i = 0; i < radical_.dim(); ++i) {
        CycMatrix row(field_, 1, d);
        for (int j = 0; j < d; ++j) row.at(0, j) = radical_.basis().at(i, j);
        radical_elements_.push_back(h_from_coords(field_, row));
    }
}

inline void HStructure::build_center_and_blocks() {
    const int n = field_->n();
    const int d = h_dim(n);

    // Commuting with K forces support on monomials with equal X+ and X-
    // powers; impose commutation with X+ and X- on that candidate space.
    std::vector<HElement::Key> cand;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cand.push_back({a, b, b});
    CycMatrix comm(field_, 2 * d, static_cast<int>(cand.size()));
    const std::array<HElement::Key, 2> gens{{{0, 1, 0}, {0, 0, 1}}};
    for (std::size_t ci = 0; ci < cand.size(); ++ci)
        for (int g = 0; g < 2; ++g) {
            HElement c = detail::h_mono_mul(field_, gens[g], cand[ci]) -
                         detail::h_mono_mul(field_, cand[ci], gens[g]);
            for (const auto& [k, v] : c.terms())
                comm.at(g * d + h_index(n, k), static_cast<int>(ci)) = v;
        }
    CycMatrix zker = comm.kernel_basis();
    for (int i = 0; i < zker.rows(); ++i) {
        HElement z(field_);
        for (std::size_t ci = 0; ci < cand.size(); ++ci)
            z.add_term(cand[ci][0], cand[ci][1], cand[ci][2],
                       zker.at(i, static_cast<int>(ci)));
        center_.push_back(std::move(z));
    }

    // Character table: a central element acts on each irreducible by a
    // scalar; equal columns reveal which irreducibles share a block.
    const int zdim = static_cast<int>(center_.size());
    CycMatrix chars(field_, zdim, n);
    for (int i = 0; i < zdim; ++i)
        for (int k = 1; k <= n; ++k) {
            CycMatrix rho(field_, k, k);
            for (const auto& [key, c] : center_[static_cast<std::size_t>(i)].terms())
                rho = rho + c * rho_mono_[static_cast<std::size_t>(k) - 1]
                                        [static_cast<std::size_t>(h_index(n, key))];
            for (int r = 0; r < k; ++r)
                for (int s = 0; s < k; ++s)
                    if (r != s ? !rho.at(r, s).is_zero()
                               : rho.at(r, r) != rho.at(0, 0))
                        throw std::logic_error(
                            "central element not scalar on an irreducible");
            chars.at(i, k - 1) = rho.at(0, 0);
        }
    auto same_col = [&](int k, int l) {
        for (int i = 0; i < zdim; ++i)
            if (chars.at(i, k - 1) != chars.at(i, l - 1)) return false;
        return true;
    };
    for (const BlockShape& shape : block_shapes(n)) {
        // block p links the irreducibles of dimensions p and N-p (the p = 0
        // block holds the N-dimensional irreducible alone)
        const int p = shape.n_odd;
        for (int k = 1; k <= n; ++k) {
            bool in_block = k == n - p || (p > 0 && k == p);
            if (same_col(k, n - p) != in_block)
                throw std::logic_error(
                    "central characters link the wrong irreducibles");
        }

        // z with character 1 on the block and 0 elsewhere, then lifted to
        // an idempotent (stays central: polynomials in a central element)
        CycMatrix target(field_, n, 1);
        target.at(n - p - 1, 0) = field_->one();
        if (p > 0) target.at(p - 1, 0) = field_->one();
        auto sol = chars.transpose().solve(target);
        if (!sol) throw std::logic_error("block indicator not in the image of the center");
        HElement e(field_);
        for (int i = 0; i < zdim; ++i)
            e += sol->at(i, 0) * center_[static_cast<std::size_t>(i)];
        const CycScalar two = field_->from_int(2);
        const CycScalar three = field_->from_int(3);
        for (int it = 0;; ++it) {
            HElement e2 = e * e;
            if (e2 == e) break;
            if (it > 8) throw std::logic_error("idempotent lifting did not converge");
            e = three * e2 - two * (e2 * e);
        }

        // computed complex dimension of the two-sided ideal H e
        CycMatrix span(field_, d, d);
        for (int t = 0; t < d; ++t) {
            HElement::Key key = h_key_of(n, t);
            HElement row = HElement::monomial(field_, key[0], key[1], key[2]) * e;
            for (const auto& [k, c] : row.terms())
                span.at(t, h_index(n, k)) = c;
        }
        long dim = Subspace(std::move(span)).dim();
        if (dim != shape.complex_dimension())
            throw std::logic_error("block dimension disagrees with the model");
        blocks_.push_back(BlockInfo{shape, std::move(e), dim});
    }

    // the block idempotents are orthogonal and resolve the identity
    HElement sum(field_);
    for (const auto& b : blocks_) sum += b.idempotent;
    if (sum != HElement::one(field_))
        throw std::logic_error("block idempotents do not sum to 1");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (std::size_t j = i + 1; j < blocks_.size(); ++j)
            if (!(blocks_[i].idempotent * blocks_[j].idempotent).is_zero())
                throw std::logic_error("block idempotents not orthogonal");
}

inline PimInfo HStructure::build_pim(int k) {
    const int n = field_->n();
    const int d = h_dim(n);
    PimInfo pim{k, std::min(k, n - k), HElement(field_), {}, {}, {}, {}, {}, {}};
    pim.top_dim = k;
    pim.block = std::min(k, n - k);

    // primitive idempotent: preimage of the elementary matrix unit E_00 of
    // the k-dimensional irreducible (zero on all others), lifted
    int sumsq = 0;
    for (int j = 1; j < k; ++j) sumsq += j * j;
    CycMatrix target(field_, phi_.rows(), 1);
    target.at(sumsq, 0) = field_->one();
    auto sol = phi_.solve(target);
    if (!sol) throw std::logic_error("semisimple-quotient map not surjective");
    HElement e = h_from_coords(field_, *sol);
    const CycScalar two = field_->from_int(2);
    const CycScalar three = field_->from_int(3);
    for (int it = 0;; ++it) {
        HElement e2 = e * e;
        if (e2 == e) break;
        if (it > 8) throw std::logic_error("idempotent lifting did not converge");
        e = three * e2 - two * (e2 * e);
    }
    pim.idempotent = e;

    // the left ideal P = H e
    CycMatrix span(field_, d, d);
    for (int t = 0; t < d; ++t) {
        HElement::Key key = h_key_of(n, t);
        HElement row = HElement::monomial(field_, key[0], key[1], key[2]) * e;
        for (const auto& [kk, c] : row.terms())
            span.at(t, h_index(n, kk)) = c;
    }
    pim.space = Subspace(std::move(span));
    const int expect = k == n ? n : 2 * n;
    if (pim.space.dim() != expect)
        throw std::logic_error("PIM dimension disagrees with the model");
    pim.gens = {restrict_operator(pim.space, reg_.k),
                restrict_operator(pim.space, reg_.x_plus),
                restrict_operator(pim.space, reg_.x_minus)};
    pim.chain_dims = {0};
    if (k == n) {
        pim.chain_dims.push_back(n);
        return pim;
    }
    const int dp = pim.space.dim();

    // left multiplication by every basis monomial, in P coordinates
    std::vector<HElement> basis_elems;
    for (int i = 0; i < dp; ++i) {
        CycMatrix row(field_, 1, d);
        for (int j = 0; j < d; ++j) row.at(0, j) = pim.space.basis().at(i, j);
        basis_elems.push_back(h_from_coords(field_, row));
    }
    std::vector<CycMatrix> rho_p;
    for (int t = 0; t < d; ++t) {
        HElement::Key key = h_key_of(n, t);
        CycMatrix m(field_, dp, dp);
        for (int i = 0; i < dp; ++i) {
            HElement img = HElement::monomial(field_, key[0], key[1], key[2]) *
                           basis_elems[static_cast<std::size_t>(i)];
            CycMatrix coords = pim.space.coordinates(h_coords(img));
            for (int j = 0; j < dp; ++j) m.at(j, i) = coords.at(0, j);
        }
        rho_p.push_back(std::move(m));
    }

    // radical J*P and socle {v : J v = 0} via the radical's P-matrices
    CycMatrix rad_rows(field_, static_cast<int>(radical_elements_.size()) * dp, dp);
    CycMatrix soc_stack(field_, static_cast<int>(radical_elements_.size()) * dp, dp);
    int row = 0;
    for (const HElement& j_elem : radical_elements_) {
        CycMatrix rho_j(field_, dp, dp);
        for (const auto& [key, c] : j_elem.terms()) {
            const CycMatrix& m =
                rho_p[static_cast<std::size_t>(h_index(n, key))];
            for (int r = 0; r < dp; ++r)
                for (int s = 0; s < dp; ++s) {
                    if (m.at(r, s).is_zero()) continue;
                    rho_j.at(r, s) += c * m.at(r, s);
                }
        }
        for (int r = 0; r < dp; ++r, ++row)
            for (int s = 0; s < dp; ++s) {
                rad_rows.at(row, s) = rho_j.at(s, r);  // column r as a row
                soc_stack.at(row, s) = rho_j.at(r, s);
            }
    }
    pim.radical = Subspace(std::move(rad_rows));
    pim.socle = Subspace(soc_stack.kernel_basis());
    if (pim.radical.dim() != 2 * n - k || pim.socle.dim() != k)
        throw std::logic_error("PIM radical/socle dimensions disagree");
    if (!pim.radical.contains(pim.socle))
        throw std::logic_error("socle not inside the radical");
    pim.chain_dims = {0, k, n, 2 * n - k, 2 * n};

    // basis of rad P extending the socle; tail coordinates span rad/soc
    const int m = n - k;  // dim of the irreducible in rad/soc (two copies)
    CycMatrix ext(field_, k + 2 * m, dp);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < dp; ++j) ext.at(i, j) = pim.socle.basis().at(i, j);
    int have = k;
    for (int i = 0; i < pim.radical.dim() && have < k + 2 * m; ++i) {
        CycMatrix trial = ext;
        for (int j = 0; j < dp; ++j)
            trial.at(have, j) = pim.radical.basis().at(i, j);
        if (trial.rank() == have + 1) ext = std::move(trial), ++have;
    }
    if (have != k + 2 * m)
        throw std::logic_error("could not extend socle basis to the radical");
    CycMatrix ext_t = ext.transpose();
    auto quotient_coords = [&](const CycMatrix& w_row) {
        auto x = ext_t.solve(w_row.transpose());
        if (!x) throw std::logic_error("vector outside rad P");
        CycMatrix q(field_, 2 * m, 1);
        for (int i = 0; i < 2 * m; ++i) q.at(i, 0) = x->at(k + i, 0);
        return q;
    };

    // generator action on the quotient rad P / soc P
    std::vector<CycMatrix> qgens;
    for (const CycMatrix& g : pim.gens) {
        CycMatrix qg(field_, 2 * m, 2 * m);
        for (int j = 0; j < 2 * m; ++j) {
            CycMatrix w(field_, 1, dp);
            for (int r = 0; r < dp; ++r) {
                CycScalar acc = field_->zero();
                for (int s = 0; s < dp; ++s) {
                    if (g.at(r, s).is_zero()) continue;
                    acc += g.at(r, s) * ext.at(k + j, s);
                }
                w.at(0, r) = acc;
            }
            CycMatrix q = quotient_coords(w);
            for (int i = 0; i < 2 * m; ++i) qg.at(i, j) = q.at(i, 0);
        }
        qgens.push_back(std::move(qg));
    }

    // Hom(irreducible of dim m, rad/soc): expected 2-dimensional; its
    // projective line parametrizes the middle submodules
    const auto& v = irreps_[static_cast<std::size_t>(m) - 1];
    CycMatrix hom_sys(field_, 3 * 2 * m * m, 2 * m * m);
    row = 0;
    for (int g = 0; g < 3; ++g)
        for (int i = 0; i < 2 * m; ++i)
            for (int al = 0; al < m; ++al, ++row)
                for (int l = 0; l < 2 * m; ++l) {
                    hom_sys.at(row, l * m + al) += qgens[static_cast<std::size_t>(g)].at(i, l);
                    if (l < m)
                        hom_sys.at(row, i * m + l) -=
                            v[static_cast<std::size_t>(g)].at(l, al);
                }
    CycMatrix hom = hom_sys.kernel_basis();
    if (hom.rows() != 2)
        throw std::logic_error("middle-family Hom space is not 2-dimensional");
    pim.hom_basis = std::move(hom);
    pim.ext_basis = std::move(ext);

    std::vector<std::pair<CycScalar, CycScalar>> samples{
        {field_->one(), field_->zero()},
        {field_->zero(), field_->one()},
        {field_->one(), field_->one()},
        {field_->one(), field_->q()}};
    for (const auto& lambda : samples) {
        MiddleModule mid = middle_module(field_, pim, lambda);
        for (const auto& other : pim.middles)
            if (other.space == mid.space)
                throw std::logic_error("lambda values gave equal middle submodules");
        pim.middles.push_back(std::move(mid));
    }
    return pim;
}

inline void HStructure::build_pims() {
    const int n = field_->n();
    for (const auto& b : blocks_) {
        const int p = b.shape.n_odd;
        pims_.push_back(build_pim(n - p));
        if (p > 0) pims_.push_back(build_pim(p));
    }
}

inline void HStructure::build() {
    build_regular();
    build_irreps();
    build_radical();
    build_center_and_blocks();
    build_pims();
}

inline const HStructure& h_structure(const CycFieldPtr& field) {
    static std::map<int, std::unique_ptr<HStructure>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(field->n());
    if (it == cache.end())
        it = cache.emplace(field->n(), std::make_unique<HStructure>(field))
                 .first;
    return *it->second;
}

inline RegularRep regular_representation(const CycFieldPtr& field) {
    return h_structure(field).regular();
}

inline Subspace jacobson_radical(const CycFieldPtr& field) {
    return h_structure(field).radical();
}

inline std::vector<std::pair<BlockShape, long>> block_dimensions(
    const CycFieldPtr& field) {
    std::vector<std::pair<BlockShape, long>> out;
    for (const auto& b : h_structure(field).blocks())
        out.push_back({b.shape, b.dimension});
    return out;
}

inline std::vector<SubmoduleChain> pim_chains(const CycFieldPtr& field) {
    return h_structure(field).chains();
}

/// Matches every plane summand N_p to a middle chain module (the whole PIM
/// when p = N) by an explicitly constructed invertible intertwiner.
inline std::vector<SummandMatch> match_summands_to_chains(
    const Decomposition& d) {
    const HStructure& hs = h_structure(d.field);
    const int n = d.field->n();
    std::vector<SummandMatch> out;
    for (const auto& s : d.summands) {
        std::vector<CycMatrix> a = s.generator_matrices();
        SummandMatch match{s.label, std::nullopt, CycMatrix()};
        const PimInfo& pim = hs.pim(s.label);
        if (s.label == n) {
            auto t = detail::find_intertwiner(d.field, a, pim.gens);
            if (!t)
                throw std::logic_error(
                    "no intertwiner from the irreducible summand to its PIM");
            match.intertwiner = std::move(*t);
            out.push_back(std::move(match));
            continue;
        }

        // Embed the summand into the PIM; the image is the middle submodule
        // for exactly one projective parameter, which is then solved for.
        auto t = detail::find_intertwiner(d.field, a, pim.gens);
        if (!t)
            throw std::logic_error(
                "no embedding of a plane summand into its PIM");
        const int k = s.label;
        const int m = n - k;
        const int dp = pim.space.dim();
        CycMatrix image(d.field, n, dp);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < dp; ++i) image.at(j, i) = t->at(i, j);
        Subspace image_space(image);
        if (!image_space.contains(pim.socle))
            throw std::logic_error("summand image misses the PIM socle");

        // image modulo the socle, in the tail coordinates of ext_basis
        CycMatrix ext_t = pim.ext_basis.transpose();
        CycMatrix quot(d.field, n, 2 * m);
        for (int i = 0; i < n; ++i) {
            CycMatrix w(d.field, dp, 1);
            for (int j = 0; j < dp; ++j) w.at(j, 0) = image.at(i, j);
            auto x = ext_t.solve(w);
            if (!x)
                throw std::logic_error("summand image not inside rad P");
            for (int j = 0; j < 2 * m; ++j) quot.at(i, j) = x->at(k + j, 0);
        }
        Subspace quot_space(std::move(quot));
        if (quot_space.dim() != m)
            throw std::logic_error("summand image has wrong size mod socle");

        // lambda is the parameter whose hom maps into the image mod socle:
        // annihilator(image) * (l1 F1 + l2 F2) = 0, linear in (l1, l2)
        CycMatrix ann = quot_space.basis().kernel_basis();
        CycMatrix lam_sys(d.field, ann.rows() * m, 2);
        int row = 0;
        for (int r = 0; r < ann.rows(); ++r)
            for (int al = 0; al < m; ++al, ++row)
                for (int i = 0; i < 2 * m; ++i) {
                    lam_sys.at(row, 0) +=
                        ann.at(r, i) * pim.hom_basis.at(0, i * m + al);
                    lam_sys.at(row, 1) +=
                        ann.at(r, i) * pim.hom_basis.at(1, i * m + al);
                }
        CycMatrix lam = lam_sys.kernel_basis();
        if (lam.rows() != 1)
            throw std::logic_error(
                "middle-family parameter of a summand is not unique");
        match.lambda = {lam.at(0, 0), lam.at(0, 1)};
        MiddleModule mid = middle_module(d.field, pim, *match.lambda);
        if (mid.space != image_space)
            throw std::logic_error(
                "solved parameter does not reproduce the summand image");

        // re-express the embedding in middle-module coordinates
        CycMatrix inter(d.field, n, n);
        for (int j = 0; j < n; ++j) {
            CycMatrix col(d.field, 1, dp);
            for (int i = 0; i < dp; ++i) col.at(0, i) = t->at(i, j);
            CycMatrix coords = mid.space.coordinates(col);
            for (int i = 0; i < n; ++i) inter.at(i, j) = coords.at(0, i);
        }
        match.intertwiner = std::move(inter);
        out.push_back(std::move(match));
    }
    return out;
}

}  // namespace qplane
