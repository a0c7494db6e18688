#ifndef PFV_IDEALS_HPP
#define PFV_IDEALS_HPP

#include <map>
#include <vector>

#include <pfv/corpus.hpp>
#include <pfv/slices.hpp>

namespace pfv {

/*
 * Weight-slice builders for the graded spaces of the dimension
 * arguments: the subalgebra A generated by g2..g5, the C[y,z]-ideal
 * J = (f0, f1) and the A-ideals I_s = (f0, ..., f_{s-1}).  Caches the
 * A-slices and the f-family, which every ideal slice reuses.
 */
template <class F>
class SliceCache {
public:
    explicit SliceCache(const Corpus<F>& corpus) : c_(corpus) {}

    const Corpus<F>& corpus() const { return c_; }

    const SliceBasis<F>& A(long n) {
        auto it = a_.find(n);
        if (it != a_.end()) return it->second;
        SliceBasis<F> s =
            subalgebra_slice<F>(c_.yz(), {c_.g(2), c_.g(3), c_.g(4), c_.g(5)}, n);
        return a_.emplace(n, std::move(s)).first->second;
    }

    SliceBasis<F> full(long n) const { return full_slice<F>(c_.yz(), n); }

    const WPoly<F>& f(long r) {
        while (static_cast<long>(fs_.size()) <= r) fs_.push_back(c_.f(fs_.size()));
        return fs_[r];
    }

    // J_(n) = C[y,z]_(n-k-1) f0 + C[y,z]_(n-k-2) f1.
    SliceBasis<F> J(long n) {
        const long k = level();
        std::vector<SliceBasis<F>> mult;
        std::vector<WPoly<F>> anchors;
        for (long r = 0; r <= 1; ++r) {
            if (n - (k + 1 + r) < 0) continue;
            mult.push_back(full(n - (k + 1 + r)));
            anchors.push_back(f(r));
        }
        if (anchors.empty()) return span_slice<F>(c_.yz(), {}, n);
        return module_slice<F>(c_.yz(), mult, anchors, n);
    }

    // I_{s(n)} = sum_{r<s} A_(n-k-1-r) f_r.
    SliceBasis<F> I(int s, long n) {
        const long k = level();
        std::vector<SliceBasis<F>> mult;
        std::vector<WPoly<F>> anchors;
        for (long r = 0; r < s; ++r) {
            if (n - (k + 1 + r) < 0) continue;
            mult.push_back(A(n - (k + 1 + r)));
            anchors.push_back(f(r));
        }
        if (anchors.empty()) return span_slice<F>(c_.yz(), {}, n);
        return module_slice<F>(c_.yz(), mult, anchors, n);
    }

    long level() const {
        if (!c_.k0()) throw config_error("ideal slices require a concrete level");
        return *c_.k0();
    }

private:
    const Corpus<F>& c_;
    std::map<long, SliceBasis<F>> a_;
    std::vector<WPoly<F>> fs_;
};

// --- the piecewise closed forms for the slice dimensions ---

inline long dim_cyz(long n) { return n / 2 + 1; }

inline long dim_A(long n) {
    if (n == 0) return 1;
    if (n == 1) return 0;
    return n / 2;
}

inline long dim_J(long k, long n) {
    if (n <= k) return 0;
    if (n <= 2 * k + 2) return n - k;
    return n / 2 + 1;
}

inline long dim_JcapA(long k, long n) {
    if (n <= k) return 0;
    if (n == k + 1) return 1;
    if (n <= 2 * k + 2) return n - k - 1;
    return n / 2;
}

inline long dim_I2(long k, long n) {
    if (n <= k) return 0;
    if (n == k + 1 || n == k + 2) return 1;
    if (n <= 2 * k + 2) return n - k - 2;
    if (n == 2 * k + 3) return k;
    return n / 2;
}

inline long dim_I3(long k, long n) {
    long d = dim_I2(k, n);
    if (n == k + 3 || (k + 5 <= n && n <= 2 * k + 3)) ++d;
    return d;
}

inline long dim_I4(long k, long n) {
    long d = dim_I3(k, n);
    if (n == k + 4) ++d;
    return d;
}

inline long dim_syzygy(long k, long n) {
    if (n <= 2 * k + 2) return 0;
    return (n - 2 * k - 3) / 2 + 1;
}

// eq. dim-RLHN: the weight-n slice of the h-invariants of R_{L(k,0)}.
inline long dim_rlh(long k, long n) {
    if (n <= k) return n / 2 + 1;
    if (n <= 2 * k) return n / 2 + 1 - n + k;
    return 0;
}

} // namespace pfv

#endif
