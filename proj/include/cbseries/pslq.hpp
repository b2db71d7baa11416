#ifndef CBSERIES_PSLQ_HPP
#define CBSERIES_PSLQ_HPP

// Integer relation detection: given x_1..x_n, find small integers a_i with
// a_1 x_1 + ... + a_n x_n = 0 to working precision. Standard one-level PSLQ
// with gamma = 2/sqrt(3): normalized y, lower-trapezoidal H, Hermite
// reduction, pivot row swap, Givens corner update. The coefficient matrix B
// is kept in exact integers so a found relation is exact.
//
// Reference: Ferguson, Bailey, Arno, Math. Comp. 68 (1999) 351-369.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbseries/precision.hpp"
#include "cbseries/rational.hpp"
#include "cbseries/real.hpp"

namespace cbs {

struct RelationResult {
    enum class Status { found, none_below_bound, precision_exhausted, iteration_cap };
    std::vector<BigInt> coefficients;
    Real residual;           // |sum a_i x_i| recomputed from the exact a_i
    BigInt norm;             // max |a_i|
    Status status = Status::iteration_cap;
    unsigned long iterations = 0;
};

inline const char* to_string(RelationResult::Status s) {
    switch (s) {
        case RelationResult::Status::found: return "found";
        case RelationResult::Status::none_below_bound: return "none_below_bound";
        case RelationResult::Status::precision_exhausted: return "precision_exhausted";
        case RelationResult::Status::iteration_cap: return "iteration_cap";
    }
    return "?";
}

namespace detail {

class PslqMatrix {
  public:
    PslqMatrix(int rows, int cols, mpfr_prec_t bits)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Real(bits)) {}
    Real& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Real& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

  private:
    int rows_, cols_;
    std::vector<Real> a_;
};

inline BigInt round_to_bigint(const Real& t) {
    Real r(t.prec());
    mpfr_round(r.raw(), t.raw());
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
    return z;
}

}  // namespace detail

inline RelationResult pslq(const std::vector<Real>& xs, const PrecisionContext& ctx,
                           const BigInt& max_norm = BigInt(1000000000000L),
                           unsigned long max_iter = 100000) {
    const int n = static_cast<int>(xs.size());
    if (n < 2) throw std::invalid_argument("pslq needs at least 2 inputs");
    for (const auto& x : xs)
        if (x.is_zero()) throw std::invalid_argument("pslq inputs must be nonzero");

    // Inputs are expected accurate to ~10^-(target+2); the detection threshold
    // sits 10 digits above the working target so true relations dip below it
    // while spurious ones cannot.
    mpfr_prec_t wb = ctx.working_bits();
    unsigned working_digits = ctx.target_digits;
    Real eps = pow10(-(static_cast<long>(working_digits) - 10), wb);

    std::vector<Real> y(n, Real(wb)), s(n, Real(wb));
    detail::PslqMatrix H(n, n - 1, wb);
    std::vector<std::vector<BigInt>> B(n, std::vector<BigInt>(n, BigInt(0)));
    for (int i = 0; i < n; ++i) B[i][i] = 1;

    RelationResult out;
    out.residual = Real(wb);

    // s_k = sqrt(sum_{j>=k} x_j^2); y = x/s_0
    {
        Real acc(wb);
        for (int i = n - 1; i >= 0; --i) {
            Real xi(wb);
            mpfr_set(xi.raw(), xs[i].raw(), MPFR_RNDN);
            acc += xi * xi;
            s[i] = sqrt(acc);
        }
        for (int i = 0; i < n; ++i) {
            Real xi(wb);
            mpfr_set(xi.raw(), xs[i].raw(), MPFR_RNDN);
            y[i] = xi / s[0];
        }
        for (int i = n - 1; i >= 0; --i) s[i] /= s[0];
    }
    for (int j = 0; j < n - 1; ++j) {
        for (int i = 0; i < j; ++i) mpfr_set_zero(H(i, j).raw(), 1);
        H(j, j) = s[j + 1] / s[j];
        for (int i = j + 1; i < n; ++i)
            H(i, j) = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }

    Real t(wb), t2(wb), t3(wb), t4(wb);
    auto reduce_row = [&](int i, int j) {
        // t = round(H_ij / H_jj); updates y, B (exact), H
        if (H(j, j).is_zero()) return false;
        t = H(i, j) / H(j, j);
        mpfr_round(t.raw(), t.raw());
        if (t.is_zero()) return true;
        BigInt tz = detail::round_to_bigint(t);
        y[j] += t * y[i];
        for (int k = 0; k < n; ++k) B[k][j] += tz * B[k][i];
        for (int k = 0; k <= j; ++k) {
            t2 = t * H(j, k);
            H(i, k) -= t2;
        }
        return true;
    };

    // initial full reduction
    for (int i = 1; i < n; ++i)
        for (int j = i - 1; j >= 0; --j)
            if (!reduce_row(i, j)) {
                out.status = RelationResult::Status::precision_exhausted;
                return out;
            }

    const double gamma = 2.0 / std::sqrt(3.0);
    auto min_y_index = [&]() {
        int jmin = 0;
        Real best = abs(y[0]);
        for (int j = 1; j < n; ++j) {
            Real a = abs(y[j]);
            if (a < best) {
                jmin = j;
                best = a;
            }
        }
        return std::make_pair(jmin, best);
    };
    auto finish_found = [&](int jmin) {
        // candidate relation = column jmin of B; minimal-norm tie break is
        // handled by scanning all columns whose |y_j| is below eps
        std::vector<int> candidates;
        for (int j = 0; j < n; ++j) {
            Real ay = abs(y[j]);
            if (ay < eps) candidates.push_back(j);
        }
        if (candidates.empty()) candidates.push_back(jmin);
        int pick = candidates[0];
        BigInt best_norm2(-1);
        for (int j : candidates) {
            BigInt norm2(0);
            for (int i = 0; i < n; ++i) norm2 += B[i][j] * B[i][j];
            if (best_norm2 < 0 || norm2 < best_norm2) {
                best_norm2 = norm2;
                pick = j;
            } else if (norm2 == best_norm2 && j < pick) {
                pick = j;
            }
        }
        std::vector<BigInt> rel(n);
        for (int i = 0; i < n; ++i) rel[i] = B[i][pick];
        // canonical sign: first nonzero coefficient positive
        for (int i = 0; i < n; ++i) {
            if (rel[i] != 0) {
                if (rel[i] < 0)
                    for (auto& c : rel) c = -c;
                break;
            }
        }
        bool all_zero = true;
        BigInt nr(0);
        Real resid(wb);
        for (int i = 0; i < n; ++i) {
            if (rel[i] != 0) all_zero = false;
            BigInt a = rel[i] < 0 ? BigInt(-rel[i]) : rel[i];
            if (a > nr) nr = a;
            Real term = Real::of(rel[i], wb);
            Real xi(wb);
            mpfr_set(xi.raw(), xs[i].raw(), MPFR_RNDN);
            resid += term * xi;
        }
        resid = abs(resid);
        out.coefficients = rel;
        out.norm = nr;
        out.residual = resid;
        if (all_zero || !(resid < eps)) {
            out.status = RelationResult::Status::precision_exhausted;
        } else if (nr > max_norm) {
            out.status = RelationResult::Status::none_below_bound;
        } else {
            out.status = RelationResult::Status::found;
        }
    };

    // exactly dependent inputs (u == v at working precision, say) surface as a
    // tiny y entry straight after the initial reduction, before any pivoting
    {
        auto [jmin, ymin] = min_y_index();
        if (ymin < eps) {
            finish_found(jmin);
            return out;
        }
    }

    for (unsigned long iter = 1; iter <= max_iter; ++iter) {
        out.iterations = iter;
        // pivot: maximize gamma^i |H_ii|
        int im = -1;
        double g = gamma;
        mpfr_set_zero(t.raw(), 1);
        for (int i = 0; i < n - 1; ++i, g *= gamma) {
            t2 = abs(H(i, i));
            mpfr_mul_d(t2.raw(), t2.raw(), g, MPFR_RNDN);
            if (im < 0 || t2 > t) {
                im = i;
                t = t2;
            }
        }
        if (im < 0 || H(im, im).is_zero()) {
            out.status = RelationResult::Status::precision_exhausted;
            return out;
        }
        int im1 = im + 1;
        std::swap(y[im], y[im1]);
        for (int k = 0; k < n - 1; ++k) std::swap(H(im, k), H(im1, k));
        for (int i = 0; i < n; ++i) std::swap(B[i][im], B[i][im1]);

        if (im <= n - 3) {
            // Givens rotation to restore lower-trapezoidal H
            t2 = H(im, im);
            t3 = H(im, im1);
            Real denom = sqrt(t2 * t2 + t3 * t3);
            if (denom.is_zero()) {
                out.status = RelationResult::Status::precision_exhausted;
                return out;
            }
            t2 /= denom;
            t3 /= denom;
            for (int i = im; i < n; ++i) {
                t = H(i, im);
                t4 = H(i, im1);
                H(i, im) = t2 * t + t3 * t4;
                H(i, im1) = t2 * t4 - t3 * t;
            }
        }
        for (int i = im1; i < n; ++i) {
            int j1 = (i == im1) ? i - 1 : im1;
            for (int j = j1 >= n - 2 ? n - 2 : j1; j >= 0; --j) {
                if (!reduce_row(i, j)) {
                    out.status = RelationResult::Status::precision_exhausted;
                    return out;
                }
            }
        }

        auto [jmin, ymin] = min_y_index();
        if (ymin < eps) {
            finish_found(jmin);
            return out;
        }
        // norm lower bound 1/max|H_jj|: past max_norm no small relation exists
        mpfr_set_zero(t2.raw(), 1);
        for (int j = 0; j < n - 1; ++j) {
            t3 = abs(H(j, j));
            if (t3 > t2) t2 = t3;
        }
        if (!t2.is_zero()) {
            Real inv = Real::of_ui(1, wb) / t2;
            Real mn = Real::of(max_norm, wb);
            if (inv > mn) {
                out.status = RelationResult::Status::none_below_bound;
                return out;
            }
        }
    }
    out.status = RelationResult::Status::iteration_cap;
    return out;
}

}  // namespace cbs

#endif
