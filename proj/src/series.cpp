#include "tuttekit/series.hpp"

#include <algorithm>

#include "tuttekit/errors.hpp"

namespace tuttekit {

TruncSeries::TruncSeries(std::vector<std::string> vars, unsigned order)
    : vars_(std::move(vars)), coeffs_(order + 1, MultiPoly(vars_)) {}

TruncSeries::TruncSeries(std::vector<std::string> vars, std::vector<MultiPoly> coeffs)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw StructuralError("series needs at least the constant coefficient");
    }
    for (const auto &c : coeffs_) {
        if (c.vars() != vars_) {
            throw StructuralError("series coefficient over a different variable list");
        }
    }
}

TruncSeries TruncSeries::one(std::vector<std::string> vars, unsigned order) {
    TruncSeries s(std::move(vars), order);
    s.coeffs_[0] = MultiPoly::constant(s.vars_, Rational(1));
    return s;
}

void TruncSeries::set(unsigned k, MultiPoly c) {
    if (c.vars() != vars_) {
        throw StructuralError("series coefficient over a different variable list");
    }
    coeffs_.at(k) = std::move(c);
}

TruncSeries TruncSeries::truncate(unsigned order) const {
    if (order > this->order()) {
        throw PreconditionError("cannot raise the truncation order of a series");
    }
    return TruncSeries(vars_, std::vector<MultiPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool operator==(const TruncSeries &a, const TruncSeries &b) {
    return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
}

namespace {

void check_compatible(const TruncSeries &a, const TruncSeries &b) {
    if (a.vars() != b.vars()) {
        throw StructuralError("series over different coefficient variables");
    }
}

} // namespace

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b) {
    check_compatible(a, b);
    const unsigned n = std::min(a.order(), b.order());
    TruncSeries out(a.vars(), n);
    for (unsigned k = 0; k <= n; ++k) {
        out.set(k, a[k] + b[k]);
    }
    return out;
}

TruncSeries operator-(const TruncSeries &a, const TruncSeries &b) {
    check_compatible(a, b);
    const unsigned n = std::min(a.order(), b.order());
    TruncSeries out(a.vars(), n);
    for (unsigned k = 0; k <= n; ++k) {
        out.set(k, a[k] - b[k]);
    }
    return out;
}

TruncSeries operator*(const TruncSeries &a, const MultiPoly &c) {
    TruncSeries out(a.vars(), a.order());
    const MultiPoly cc = c.with_vars(a.vars());
    for (unsigned k = 0; k <= a.order(); ++k) {
        out.set(k, a[k] * cc);
    }
    return out;
}

TruncSeries operator*(const TruncSeries &a, const Rational &c) {
    TruncSeries out(a.vars(), a.order());
    for (unsigned k = 0; k <= a.order(); ++k) {
        out.set(k, a[k] * c);
    }
    return out;
}

TruncSeries series_mul(const TruncSeries &a, const TruncSeries &b) {
    check_compatible(a, b);
    const unsigned n = std::min(a.order(), b.order());
    std::vector<MultiPoly> out(n + 1, MultiPoly(a.vars()));
    // Coefficients are independent; each one is a private accumulation.
#pragma omp parallel for schedule(dynamic)
    for (int k = static_cast<int>(n); k >= 0; --k) {
        MultiPoly acc(a.vars());
        for (int i = 0; i <= k; ++i) {
            if (!a[i].is_zero() && !b[k - i].is_zero()) {
                acc += a[i] * b[k - i];
            }
        }
        out[k] = std::move(acc);
    }
    return TruncSeries(a.vars(), std::move(out));
}

TruncSeries series_exp(const TruncSeries &s) {
    if (!s[0].is_zero()) {
        throw PreconditionError("series_exp requires a zero constant term");
    }
    const unsigned n = s.order();
    std::vector<MultiPoly> e(n + 1, MultiPoly(s.vars()));
    e[0] = MultiPoly::constant(s.vars(), Rational(1));
    // k e_k = sum_{j=1}^{k} j s_j e_{k-j}
    for (unsigned k = 1; k <= n; ++k) {
        MultiPoly acc(s.vars());
        for (unsigned j = 1; j <= k; ++j) {
            if (!s[j].is_zero() && !e[k - j].is_zero()) {
                acc += (s[j] * e[k - j]) * Rational(static_cast<long>(j));
            }
        }
        e[k] = acc * Rational(BigInt(1), BigInt(k));
    }
    return TruncSeries(s.vars(), std::move(e));
}

TruncSeries series_log(const TruncSeries &s) {
    if (!(s[0] == MultiPoly::constant(s.vars(), Rational(1)))) {
        throw PreconditionError("series_log requires constant term 1");
    }
    const unsigned n = s.order();
    std::vector<MultiPoly> l(n + 1, MultiPoly(s.vars()));
    // s' = s l'  =>  k l_k = k s_k - sum_{j=1}^{k-1} j l_j s_{k-j}
    for (unsigned k = 1; k <= n; ++k) {
        MultiPoly acc = s[k] * Rational(static_cast<long>(k));
        for (unsigned j = 1; j < k; ++j) {
            if (!l[j].is_zero() && !s[k - j].is_zero()) {
                acc -= (l[j] * s[k - j]) * Rational(static_cast<long>(j));
            }
        }
        l[k] = acc * Rational(BigInt(1), BigInt(k));
    }
    return TruncSeries(s.vars(), std::move(l));
}

TruncSeries series_pow(const TruncSeries &s, const MultiPoly &exponent) {
    return series_exp(series_log(s) * exponent);
}

TruncSeries series_filter_every_nth(const TruncSeries &s, unsigned n) {
    if (n == 0) {
        throw PreconditionError("series_filter_every_nth requires n >= 1");
    }
    TruncSeries out(s.vars(), s.order());
    for (unsigned k = 0; k <= s.order(); k += n) {
        out.set(k, s[k]);
    }
    return out;
}

TruncSeries deformed_exponential(const MultiPoly &alpha, const MultiPoly &beta, unsigned order) {
    if (alpha.vars() != beta.vars()) {
        throw StructuralError("deformed_exponential: alpha and beta over different variables");
    }
    const auto &vars = alpha.vars();
    TruncSeries out(vars, order);
    MultiPoly alpha_pow = MultiPoly::constant(vars, Rational(1));
    MultiPoly beta_pow = MultiPoly::constant(vars, Rational(1)); // beta^C(n,2)
    for (unsigned n = 0; n <= order; ++n) {
        if (n >= 2) {
            beta_pow *= beta.pow(n - 1); // C(n,2) - C(n-1,2) = n-1
        }
        out.set(n, (alpha_pow * beta_pow) * Rational(BigInt(1), factorial(n)));
        alpha_pow *= alpha;
    }
    return out;
}

} // namespace tuttekit
