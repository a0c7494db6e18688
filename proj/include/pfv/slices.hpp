#ifndef PFV_SLICES_HPP
#define PFV_SLICES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pfv/errors.hpp>
#include <pfv/matrix.hpp>
#include <pfv/wpoly.hpp>

namespace pfv {

// All monomials of the given weighted degree, in the canonical slice
// order (graded-lex; within the slice the lexicographically largest
// exponent vector comes first, e.g. y^5, y^3 z, y z^2 at weight 5).
inline std::vector<Exps> monomial_slice(const WRingPtr& ring, long n) {
    std::vector<Exps> out;
    Exps cur(ring->nvars(), 0);
    auto rec = [&](auto&& self, size_t i, long rem) -> void {
        if (i == ring->nvars()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        // Highest power of the earlier variable first => lex-descending.
        const long w = ring->weights[i];
        for (long e = rem / w; e >= 0; --e) {
            cur[i] = static_cast<int>(e);
            self(self, i + 1, rem - e * w);
            cur[i] = 0;
        }
    };
    rec(rec, 0, n);
    return out;
}

// Coordinate vector of a homogeneous polynomial with respect to an
// explicit monomial list.
template <class F>
std::vector<F> coordinates(const WPoly<F>& p, const std::vector<Exps>& monos) {
    std::vector<F> v(monos.size(), F(0));
    size_t found = 0;
    for (size_t i = 0; i < monos.size(); ++i) {
        auto it = p.terms().find(monos[i]);
        if (it != p.terms().end()) {
            v[i] = it->second;
            ++found;
        }
    }
    if (found != p.nterms()) {
        throw dimension_mismatch("polynomial has terms outside the monomial list");
    }
    return v;
}

/*
 * A linear subspace of the weight-n component of a weighted polynomial
 * ring, stored as an RREF coordinate matrix over the canonical monomial
 * list of that weight.  Equality of subspaces is equality of matrices.
 */
template <class F>
struct SliceBasis {
    WRingPtr ring;
    long weight = 0;
    std::vector<Exps> monomials;
    Matrix<F> rows;

    size_t dim() const { return rows.rows(); }

    WPoly<F> basis_poly(size_t i) const {
        WPoly<F> p(ring);
        for (size_t j = 0; j < monomials.size(); ++j) p.add_term(monomials[j], rows(i, j));
        return p;
    }

    std::vector<WPoly<F>> basis_polys() const {
        std::vector<WPoly<F>> out;
        for (size_t i = 0; i < dim(); ++i) out.push_back(basis_poly(i));
        return out;
    }

    friend bool operator==(const SliceBasis& a, const SliceBasis& b) {
        return *a.ring == *b.ring && a.weight == b.weight && a.rows == b.rows;
    }
};

// Span of homogeneous polynomials of common weight n.
template <class F>
SliceBasis<F> span_slice(const WRingPtr& ring, const std::vector<WPoly<F>>& gens, long n) {
    SliceBasis<F> s;
    s.ring = ring;
    s.weight = n;
    s.monomials = monomial_slice(ring, n);
    Matrix<F> m(0, s.monomials.size());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto w = g.homogeneous_weight();
        if (!w || *w != n) throw dimension_mismatch("generator is not homogeneous of weight " + std::to_string(n));
        m.append_row(coordinates(g, s.monomials));
    }
    s.rows = rref(m).reduced;
    return s;
}

// The full weight-n component of the ring.
template <class F>
SliceBasis<F> full_slice(const WRingPtr& ring, long n) {
    SliceBasis<F> s;
    s.ring = ring;
    s.weight = n;
    s.monomials = monomial_slice(ring, n);
    s.rows = Matrix<F>::identity(s.monomials.size());
    return s;
}

// Weight-n component of the subalgebra generated by homogeneous gens
// (with 1 adjoined, so the weight-0 slice is the constants).
template <class F>
SliceBasis<F> subalgebra_slice(const WRingPtr& ring, const std::vector<WPoly<F>>& gens, long n) {
    std::vector<long> w;
    for (const auto& g : gens) {
        auto hw = g.homogeneous_weight();
        if (!hw || *hw <= 0) throw dimension_mismatch("subalgebra generators must be homogeneous of positive weight");
        w.push_back(*hw);
    }
    std::vector<WPoly<F>> products;
    std::vector<int> exps(gens.size(), 0);
    auto rec = [&](auto&& self, size_t i, long rem, const WPoly<F>& acc) -> void {
        if (i == gens.size()) {
            if (rem == 0) products.push_back(acc);
            return;
        }
        WPoly<F> cur = acc;
        for (long e = 0; e * w[i] <= rem; ++e) {
            if (e > 0) cur *= gens[i];
            self(self, i + 1, rem - e * w[i], cur);
        }
    };
    rec(rec, 0, n, WPoly<F>::constant(ring, F(1)));
    return span_slice(ring, products, n);
}

// Weight-n component of sum_i multipliers[i] * anchors[i], where each
// multipliers[i] is a slice of weight n - weight(anchors[i]).
template <class F>
SliceBasis<F> module_slice(const WRingPtr& ring,
                           const std::vector<SliceBasis<F>>& multipliers,
                           const std::vector<WPoly<F>>& anchors, long n) {
    if (multipliers.size() != anchors.size()) throw dimension_mismatch("multiplier/anchor count mismatch");
    std::vector<WPoly<F>> gens;
    for (size_t i = 0; i < anchors.size(); ++i) {
        auto aw = anchors[i].homogeneous_weight();
        if (!aw) throw dimension_mismatch("module anchor must be homogeneous and nonzero");
        if (multipliers[i].weight + *aw != n) {
            throw dimension_mismatch("multiplier slice weight does not match target weight");
        }
        for (size_t r = 0; r < multipliers[i].dim(); ++r) {
            gens.push_back(multipliers[i].basis_poly(r) * anchors[i]);
        }
    }
    return span_slice(ring, gens, n);
}

// Intersection of two subspaces of the same slice.
template <class F>
SliceBasis<F> intersect_slices(const SliceBasis<F>& a, const SliceBasis<F>& b) {
    if (!(*a.ring == *b.ring) || a.weight != b.weight) {
        throw dimension_mismatch("slices live in different components");
    }
    const size_t m = a.monomials.size();
    const size_t na = a.dim(), nb = b.dim();
    // Solve u A = v B: kernel of the m x (na+nb) system [A^T | -B^T].
    Matrix<F> sys(m, na + nb);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < na; ++j) sys(i, j) = a.rows(j, i);
        for (size_t j = 0; j < nb; ++j) sys(i, na + j) = -b.rows(j, i);
    }
    Matrix<F> ker = nullspace(sys);
    Matrix<F> rows(0, m);
    for (size_t r = 0; r < ker.rows(); ++r) {
        std::vector<F> v(m, F(0));
        for (size_t j = 0; j < na; ++j) {
            if (ker(r, j).is_zero()) continue;
            for (size_t i = 0; i < m; ++i) v[i] += ker(r, j) * a.rows(j, i);
        }
        rows.append_row(v);
    }
    SliceBasis<F> out;
    out.ring = a.ring;
    out.weight = a.weight;
    out.monomials = a.monomials;
    out.rows = rref(rows).reduced;
    return out;
}

template <class F>
struct ContainsResult {
    bool member = false;
    std::vector<F> coeffs;    // expansion in the slice basis when member
    long witness_col = -1;    // first unreducible coordinate otherwise
};

// Membership of a coordinate vector in the row space of an RREF matrix,
// by reduction against the pivots.
template <class F>
ContainsResult<F> reduce_against(const Matrix<F>& rref_rows,
                                 const std::vector<size_t>& pivot_cols,
                                 std::vector<F> v) {
    ContainsResult<F> out;
    out.coeffs.assign(rref_rows.rows(), F(0));
    for (size_t i = 0; i < rref_rows.rows(); ++i) {
        const F c = v[pivot_cols[i]];
        if (c.is_zero()) continue;
        out.coeffs[i] = c;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rref_rows(i, j);
    }
    for (size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero()) {
            out.member = false;
            out.witness_col = static_cast<long>(j);
            return out;
        }
    }
    out.member = true;
    return out;
}

template <class F>
std::vector<size_t> pivot_columns(const Matrix<F>& rref_rows) {
    std::vector<size_t> pc;
    for (size_t i = 0; i < rref_rows.rows(); ++i) {
        size_t j = 0;
        while (j < rref_rows.cols() && rref_rows(i, j).is_zero()) ++j;
        pc.push_back(j);
    }
    return pc;
}

template <class F>
ContainsResult<F> contains(const SliceBasis<F>& s, const WPoly<F>& p) {
    if (p.is_zero()) {
        ContainsResult<F> out;
        out.member = true;
        out.coeffs.assign(s.dim(), F(0));
        return out;
    }
    auto w = p.homogeneous_weight();
    if (!w || *w != s.weight) throw dimension_mismatch("polynomial weight does not match slice");
    return reduce_against(s.rows, pivot_columns(s.rows), coordinates(p, s.monomials));
}

template <class F>
bool slice_subset(const SliceBasis<F>& sub, const SliceBasis<F>& ambient) {
    const auto pc = pivot_columns(ambient.rows);
    for (size_t i = 0; i < sub.dim(); ++i) {
        if (!reduce_against(ambient.rows, pc, sub.rows.row(i)).member) return false;
    }
    return true;
}

/*
 * Total codimension of a graded subspace inside a graded ambient space,
 * given their slices for weights 0..cap.  Containment is verified in
 * every weight, and the per-weight codimension must vanish on the last
 * three weights (the stabilization window); otherwise the cap is too
 * small to certify a finite answer and we refuse rather than guess.
 */
template <class F>
long graded_codim(const std::vector<SliceBasis<F>>& sub,
                  const std::vector<SliceBasis<F>>& ambient, long cap) {
    if (sub.size() != ambient.size() || static_cast<long>(sub.size()) != cap + 1) {
        throw dimension_mismatch("need slices for every weight 0..cap");
    }
    long codim = 0;
    for (long n = 0; n <= cap; ++n) {
        if (!slice_subset(sub[n], ambient[n])) {
            throw dimension_mismatch("subspace is not contained in ambient space at weight " + std::to_string(n));
        }
        codim += static_cast<long>(ambient[n].dim() - sub[n].dim());
    }
    for (long n = cap - 2; n <= cap; ++n) {
        if (sub[n].dim() != ambient[n].dim()) {
            throw resource_error("codimension not stabilized by weight cap " + std::to_string(cap));
        }
    }
    return codim;
}

/*
 * Pairs (a, b) with a*f + b*g = 0, a of weight n - wt(f): the weight-n
 * slice of the syzygy module of (f, g).  Rows are RREF coordinates over
 * the concatenated monomial lists for the a- and b-parts.
 */
template <class F>
struct PairSlice {
    WRingPtr ring;
    long a_weight = 0, b_weight = 0;
    std::vector<Exps> a_monos, b_monos;
    Matrix<F> rows;

    size_t dim() const { return rows.rows(); }

    std::pair<WPoly<F>, WPoly<F>> pair_poly(size_t i) const {
        WPoly<F> a(ring), b(ring);
        for (size_t j = 0; j < a_monos.size(); ++j) a.add_term(a_monos[j], rows(i, j));
        for (size_t j = 0; j < b_monos.size(); ++j) b.add_term(b_monos[j], rows(i, a_monos.size() + j));
        return {a, b};
    }
};

template <class F>
std::vector<F> pair_coordinates(const PairSlice<F>& s, const WPoly<F>& a, const WPoly<F>& b) {
    std::vector<F> v = coordinates(a, s.a_monos);
    std::vector<F> w = coordinates(b, s.b_monos);
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

template <class F>
PairSlice<F> syzygy_slice(const WPoly<F>& f, const WPoly<F>& g, long n) {
    const WRingPtr ring = f.ring();
    auto wf = f.homogeneous_weight(), wg = g.homogeneous_weight();
    if (!wf || !wg) throw dimension_mismatch("syzygy inputs must be homogeneous and nonzero");
    PairSlice<F> s;
    s.ring = ring;
    s.a_weight = n - *wf;
    s.b_weight = n - *wg;
    if (s.a_weight >= 0) s.a_monos = monomial_slice(ring, s.a_weight);
    if (s.b_weight >= 0) s.b_monos = monomial_slice(ring, s.b_weight);
    const std::vector<Exps> target = monomial_slice(ring, n);
    const size_t na = s.a_monos.size(), nb = s.b_monos.size();
    // Columns = unknown pair coefficients; rows = target monomials.
    Matrix<F> sys(target.size(), na + nb);
    for (size_t j = 0; j < na; ++j) {
        const WPoly<F> prod = WPoly<F>::monomial(ring, s.a_monos[j], F(1)) * f;
        const auto col = coordinates(prod, target);
        for (size_t i = 0; i < target.size(); ++i) sys(i, j) = col[i];
    }
    for (size_t j = 0; j < nb; ++j) {
        const WPoly<F> prod = WPoly<F>::monomial(ring, s.b_monos[j], F(1)) * g;
        const auto col = coordinates(prod, target);
        for (size_t i = 0; i < target.size(); ++i) sys(i, na + j) = col[i];
    }
    s.rows = rref(nullspace(sys)).reduced;
    return s;
}

// Weight-n slice of the submodule generated by one syzygy pair over the
// full polynomial ring.
template <class F>
PairSlice<F> pair_multiples_slice(const WPoly<F>& f, const WPoly<F>& g,
                                  const WPoly<F>& a0, const WPoly<F>& b0, long n) {
    const WRingPtr ring = f.ring();
    auto wf = f.homogeneous_weight();
    auto wa = a0.homogeneous_weight();
    if (!wf || !wa) throw dimension_mismatch("need homogeneous data");
    PairSlice<F> s;
    s.ring = ring;
    s.a_weight = n - *wf;
    s.b_weight = n - *g.homogeneous_weight();
    if (s.a_weight >= 0) s.a_monos = monomial_slice(ring, s.a_weight);
    if (s.b_weight >= 0) s.b_monos = monomial_slice(ring, s.b_weight);
    Matrix<F> rows(0, s.a_monos.size() + s.b_monos.size());
    const long mult_w = s.a_weight - *wa;
    if (mult_w >= 0) {
        for (const Exps& e : monomial_slice(ring, mult_w)) {
            const WPoly<F> mu = WPoly<F>::monomial(ring, e, F(1));
            rows.append_row(pair_coordinates(s, mu * a0, mu * b0));
        }
    }
    s.rows = rref(rows).reduced;
    return s;
}

// Weight-n slice of the kernel of the algebra map from a weighted
// polynomial ring (one variable per image) to the target ring.
template <class F>
SliceBasis<F> kernel_slice(const WRingPtr& domain, const WRingPtr& target,
                           const std::vector<WPoly<F>>& images, long n) {
    if (images.size() != domain->nvars()) throw ring_mismatch("one image per domain variable required");
    SliceBasis<F> s;
    s.ring = domain;
    s.weight = n;
    s.monomials = monomial_slice(domain, n);
    const std::vector<Exps> tmonos = monomial_slice(target, n);
    Matrix<F> sys(tmonos.size(), s.monomials.size());
    for (size_t j = 0; j < s.monomials.size(); ++j) {
        WPoly<F> img = WPoly<F>::constant(target, F(1));
        for (size_t i = 0; i < images.size(); ++i) {
            if (s.monomials[j][i] != 0) img *= images[i].pow(s.monomials[j][i]);
        }
        const auto col = coordinates(img, tmonos);
        for (size_t i = 0; i < tmonos.size(); ++i) sys(i, j) = col[i];
    }
    s.rows = rref(nullspace(sys)).reduced;
    return s;
}

} // namespace pfv

#endif
