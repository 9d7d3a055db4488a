#pragma once

/// Decomposition of M under the left H-action into N indecomposable
/// summands N_p of dimension N, grouped by the congruence class (r+s) mod N,
/// together with a brute-force invariant-subspace lattice used to certify
/// indecomposability.

#include <qplane/action.hpp>
#include <qplane/matrix.hpp>

#include <algorithm>
#include <vector>

namespace qplane {

struct ModuleSummand {
    int label;             // p: dimension of the invariant subspace
    int congruence_class;  // (r+s) mod N shared by the basis
    std::vector<PlaneElement::Key> basis;            // N monomials
    std::vector<PlaneElement::Key> invariant_basis;  // p monomials
    CycFieldPtr field;

    /// Generator matrices restricted to this summand (columns act on
    /// coordinates in `basis` order).
    std::vector<CycMatrix> generator_matrices() const {
        const int n = field->n();
        std::vector<CycMatrix> out;
        for (int g = 0; g < 3; ++g) {
            HElement gen = g == 0   ? HElement::k(field)
                           : g == 1 ? HElement::x_plus(field)
                                    : HElement::x_minus(field);
            CycMatrix m(field, static_cast<int>(basis.size()),
                        static_cast<int>(basis.size()));
            for (std::size_t j = 0; j < basis.size(); ++j) {
                PlaneElement img = act(
                    gen, PlaneElement::monomial(field, basis[j].first,
                                                basis[j].second));
                for (const auto& [k, c] : img.terms()) {
                    auto it = std::find(basis.begin(), basis.end(), k);
                    if (it == basis.end())
                        throw std::logic_error(
                            "summand basis not closed under the action");
                    m.at(static_cast<int>(it - basis.begin()),
                         static_cast<int>(j)) = c;
                }
            }
            (void)n;
            out.push_back(std::move(m));
        }
        return out;
    }
};

struct Decomposition {
    CycFieldPtr field;
    std::vector<ModuleSummand> summands;  // ordered label N, N-1, ..., 1
};

/// All act-invariant subspaces of a summand, as subspaces of its N-dim
/// coordinate space, sorted by dimension.
///
/// K acts on a summand with N distinct eigenvalues (q^{2r-c} over the class
/// c, N odd), so every invariant subspace is spanned by a subset of the
/// monomial basis; subsets closed under the X+/X- arrows enumerate the full
/// lattice. A span-closure sweep from every single basis vector
/// cross-checks the enumeration.
inline std::vector<Subspace> invariant_subspaces(const ModuleSummand& s) {
    const CycFieldPtr& field = s.field;
    const int dim = static_cast<int>(s.basis.size());
    std::vector<CycMatrix> gens = s.generator_matrices();

    // Distinct K eigenvalues justify the subset enumeration.
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (gens[0].at(i, i) == gens[0].at(j, j))
                throw std::logic_error("K eigenvalues on summand not distinct");

    // arrows[j] = set of basis indices hit by X+ or X- from j
    std::vector<std::vector<int>> arrows(dim);
    for (int g = 1; g <= 2; ++g)
        for (int j = 0; j < dim; ++j)
            for (int i = 0; i < dim; ++i)
                if (!gens[g].at(i, j).is_zero()) arrows[j].push_back(i);

    std::vector<Subspace> lattice;
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        bool closed = true;
        for (int j = 0; j < dim && closed; ++j) {
            if (!(mask & (1u << j))) continue;
            for (int i : arrows[j])
                if (!(mask & (1u << i))) {
                    closed = false;
                    break;
                }
        }
        if (!closed) continue;
        CycMatrix rows(field, __builtin_popcount(mask), dim);
        int r = 0;
        for (int j = 0; j < dim; ++j)
            if (mask & (1u << j)) rows.at(r++, j) = field->one();
        lattice.emplace_back(std::move(rows));
    }
    std::sort(lattice.begin(), lattice.end(),
              [](const Subspace& a, const Subspace& b) {
                  return a.dim() < b.dim();
              });

    // Independent oracle: the closure of every single basis vector must
    // already be in the enumerated lattice.
    for (int j = 0; j < dim; ++j) {
        CycMatrix seed(field, 1, dim);
        seed.at(0, j) = field->one();
        Subspace closure = span_closure(seed, gens);
        if (std::find(lattice.begin(), lattice.end(), closure) ==
            lattice.end())
            throw std::logic_error(
                "span-closure oracle disagrees with subset enumeration");
    }
    return lattice;
}

/// Groups monomials by (r+s) mod N and certifies the expected structure:
/// class c carries label p = c+1, with invariant subspace spanned by the
/// literal r+s = c monomials. Throws if any certification fails.
inline Decomposition decompose(const CycFieldPtr& field) {
    const int n = field->n();
    Decomposition d{field, {}};
    for (int label = n; label >= 1; --label) {
        const int cls = label - 1;
        ModuleSummand s;
        s.label = label;
        s.congruence_class = cls;
        s.field = field;
        for (int r = 0; r < n; ++r) {
            int srem = (cls - r) % n;
            if (srem < 0) srem += n;
            s.basis.push_back({r, srem});
        }
        for (int r = 0; r <= cls; ++r) s.invariant_basis.push_back({r, cls - r});
        std::sort(s.basis.begin(), s.basis.end());
        std::sort(s.invariant_basis.begin(), s.invariant_basis.end());

        // closure of the full summand is checked inside generator_matrices
        std::vector<CycMatrix> gens = s.generator_matrices();

        // the invariant subspace is closed and has dimension label
        CycMatrix inv(field, static_cast<int>(s.invariant_basis.size()),
                      static_cast<int>(s.basis.size()));
        for (std::size_t i = 0; i < s.invariant_basis.size(); ++i) {
            auto it = std::find(s.basis.begin(), s.basis.end(),
                                s.invariant_basis[i]);
            inv.at(static_cast<int>(i),
                   static_cast<int>(it - s.basis.begin())) = field->one();
        }
        Subspace inv_space(inv);
        if (inv_space.dim() != label)
            throw std::logic_error("invariant subspace dimension mismatch");
        if (span_closure(inv, gens) != inv_space)
            throw std::logic_error("invariant subspace not invariant");

        // indecomposability: the lattice must be the chain {0, p, N}
        std::vector<Subspace> lattice = invariant_subspaces(s);
        std::vector<int> dims;
        for (const auto& sub : lattice) dims.push_back(sub.dim());
        std::vector<int> expect =
            label == n ? std::vector<int>{0, n} : std::vector<int>{0, label, n};
        if (dims != expect)
            throw std::logic_error(
                "invariant-subspace lattice disagrees with the chain shape");
        d.summands.push_back(std::move(s));
    }

    // direct sum: pairwise disjoint bases exhausting all N^2 monomials
    std::vector<PlaneElement::Key> all;
    for (const auto& s : d.summands)
        all.insert(all.end(), s.basis.begin(), s.basis.end());
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) != n * n ||
        std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::logic_error("summand bases do not form a direct sum");
    return d;
}

/// Projection of an arbitrary element onto the summands it meets; the
/// components sum back to the input.
inline std::vector<std::pair<int, PlaneElement>> summand_of(
    const Decomposition& d, const PlaneElement& m) {
    std::vector<std::pair<int, PlaneElement>> out;
    for (const auto& s : d.summands) {
        PlaneElement part(m.field());
        for (const auto& [k, c] : m.terms())
            if ((k.first + k.second) % m.field()->n() == s.congruence_class)
                part.add_term(k.first, k.second, c);
        if (!part.is_zero()) out.push_back({s.label, std::move(part)});
    }
    return out;
}

}  // namespace qplane
