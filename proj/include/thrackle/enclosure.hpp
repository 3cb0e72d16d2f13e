#pragma once

// Rigorous real-number enclosures with exact rational endpoints.
// Transcendental values come from MPFR with directed rounding; everything
// after that is exact rational interval arithmetic.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace thrackle {

inline constexpr mpfr_prec_t kDefaultPrecision = 160;

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    mpq_class to_rational() const {
        mpq_class q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

struct Enclosure {
    mpq_class lo;
    mpq_class hi;

    static Enclosure exact(const mpq_class& x) { return {x, x}; }

    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
    mpq_class width() const { return hi - lo; }
    mpq_class center() const { return mpq_class((lo + hi) / 2); }
    double midpoint() const { return center().get_d(); }
};

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }
inline Enclosure operator+(const Enclosure& a, const mpq_class& b) { return {a.lo + b, a.hi + b}; }
inline Enclosure operator-(const Enclosure& a, const mpq_class& b) { return {a.lo - b, a.hi - b}; }
inline Enclosure operator+(const mpq_class& a, const Enclosure& b) { return b + a; }
inline Enclosure operator-(const mpq_class& a, const Enclosure& b) { return -b + a; }

inline Enclosure operator*(const Enclosure& a, const mpq_class& s) {
    mpq_class x = a.lo * s, y = a.hi * s;
    return {std::min(x, y), std::max(x, y)};
}
inline Enclosure operator*(const mpq_class& s, const Enclosure& a) { return a * s; }

inline Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    mpq_class c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

// a < b holds for every pair of values in the enclosures.
inline bool certainly_less(const Enclosure& a, const Enclosure& b) { return a.hi < b.lo; }
inline bool certainly_less(const mpq_class& a, const Enclosure& b) { return a < b.lo; }
inline bool certainly_less(const Enclosure& a, const mpq_class& b) { return a.hi < b; }
inline bool certainly_leq(const Enclosure& a, const Enclosure& b) { return a.hi <= b.lo; }
inline bool certainly_leq(const mpq_class& a, const Enclosure& b) { return a <= b.lo; }
inline bool certainly_leq(const Enclosure& a, const mpq_class& b) { return a.hi <= b; }

namespace detail {

template <class F>
Enclosure directed(F&& f, mpfr_prec_t prec) {
    MpfrValue lo(prec), hi(prec);
    f(lo.get(), MPFR_RNDD);
    f(hi.get(), MPFR_RNDU);
    return {lo.to_rational(), hi.to_rational()};
}

// Sets dst to q rounded in direction rnd.
inline void set_rational(mpfr_ptr dst, const mpq_class& q, mpfr_rnd_t rnd) { mpfr_set_q(dst, q.get_mpq_t(), rnd); }

}  // namespace detail

// ln x for rational x > 0. The argument is first enclosed in MPFR, then the
// monotone logarithm is applied with matching directed rounding.
inline Enclosure ln(const mpq_class& x, mpfr_prec_t prec = kDefaultPrecision) {
    require(x > 0, "ln of non-positive value");
    MpfrValue lo(prec), hi(prec);
    detail::set_rational(lo.get(), x, MPFR_RNDD);
    detail::set_rational(hi.get(), x, MPFR_RNDU);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    return {lo.to_rational(), hi.to_rational()};
}

inline Enclosure sqrt(const mpq_class& x, mpfr_prec_t prec = kDefaultPrecision) {
    require(x >= 0, "sqrt of negative value");
    MpfrValue lo(prec), hi(prec);
    detail::set_rational(lo.get(), x, MPFR_RNDD);
    detail::set_rational(hi.get(), x, MPFR_RNDU);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return {lo.to_rational(), hi.to_rational()};
}

inline Enclosure euler_gamma(mpfr_prec_t prec = kDefaultPrecision) {
    return detail::directed([](mpfr_ptr r, mpfr_rnd_t rnd) { mpfr_const_euler(r, rnd); }, prec);
}

// Exact H(n) as a rational. Denominators grow like lcm(1..n), so keep n modest.
inline mpq_class harmonic_exact(long n) {
    mpq_class h = 0;
    for (long i = 1; i <= n; ++i) h += mpq_class(1, i);
    return h;
}

// Enclosure of H(n) by directed-rounding summation; exact below the threshold.
inline Enclosure harmonic(long n, mpfr_prec_t prec = kDefaultPrecision) {
    require(n >= 0, "harmonic of negative n");
    if (n <= 400) return Enclosure::exact(harmonic_exact(n));
    MpfrValue lo(prec), hi(prec), t(prec);
    mpfr_set_ui(lo.get(), 0, MPFR_RNDN);
    mpfr_set_ui(hi.get(), 0, MPFR_RNDN);
    for (long i = n; i >= 1; --i) {
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>(i), MPFR_RNDD);
        mpfr_add(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>(i), MPFR_RNDU);
        mpfr_add(hi.get(), hi.get(), t.get(), MPFR_RNDU);
    }
    return {lo.to_rational(), hi.to_rational()};
}

// Incremental enclosures of H(1), H(2), ... for sweeping checks.
class HarmonicSweep {
public:
    explicit HarmonicSweep(mpfr_prec_t prec = kDefaultPrecision) : lo_(prec), hi_(prec), t_(prec) {
        mpfr_set_ui(lo_.get(), 0, MPFR_RNDN);
        mpfr_set_ui(hi_.get(), 0, MPFR_RNDN);
    }

    // Advances to H(n+1) and returns n+1.
    long next() {
        ++n_;
        mpfr_set_ui(t_.get(), 1, MPFR_RNDN);
        mpfr_div_ui(t_.get(), t_.get(), static_cast<unsigned long>(n_), MPFR_RNDD);
        mpfr_add(lo_.get(), lo_.get(), t_.get(), MPFR_RNDD);
        mpfr_set_ui(t_.get(), 1, MPFR_RNDN);
        mpfr_div_ui(t_.get(), t_.get(), static_cast<unsigned long>(n_), MPFR_RNDU);
        mpfr_add(hi_.get(), hi_.get(), t_.get(), MPFR_RNDU);
        return n_;
    }

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }
    Enclosure value() const { return {lo_.to_rational(), hi_.to_rational()}; }

private:
    long n_ = 0;
    MpfrValue lo_, hi_, t_;
};

struct HarmonicWindowCheck {
    bool lower_holds = false;  // ln n + gamma <= H(n)
    bool upper_holds = false;  // H(n) < ln n + gamma + 1/(2n)
};

// Certified check of ln n + gamma <= H(n) < ln n + gamma + 1/(2n) given an enclosure of H(n).
inline HarmonicWindowCheck harmonic_window(long n, const Enclosure& h, mpfr_prec_t prec = kDefaultPrecision) {
    Enclosure base = ln(mpq_class(n), prec) + euler_gamma(prec);
    HarmonicWindowCheck r;
    r.lower_holds = certainly_leq(base, h);
    r.upper_holds = certainly_less(h, base + mpq_class(1, 2 * n));
    return r;
}

// Sweeps n = 1..nmax checking the harmonic window. Uses MPFR comparisons on
// directed-rounded bounds to keep the sweep fast; returns the first failing n or 0.
inline long harmonic_window_sweep(long nmax, mpfr_prec_t prec = kDefaultPrecision) {
    HarmonicSweep h(prec);
    MpfrValue g_lo(prec), g_hi(prec), a(prec), b(prec), t(prec);
    mpfr_const_euler(g_lo.get(), MPFR_RNDD);
    mpfr_const_euler(g_hi.get(), MPFR_RNDU);
    while (true) {
        long n = h.next();
        if (n > nmax) return 0;
        // a <= ln n + gamma <= b
        mpfr_set_ui(a.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_log(a.get(), a.get(), MPFR_RNDD);
        mpfr_add(a.get(), a.get(), g_lo.get(), MPFR_RNDD);
        mpfr_set_ui(b.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_log(b.get(), b.get(), MPFR_RNDU);
        mpfr_add(b.get(), b.get(), g_hi.get(), MPFR_RNDU);
        if (mpfr_cmp(b.get(), h.lo()) > 0) return n;
        // upper: H(n) < ln n + gamma + 1/(2n), needs h.hi < a + 1/(2n)
        mpfr_set_ui(t.get(), 1, MPFR_RNDN);
        mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>(2 * n), MPFR_RNDD);
        mpfr_add(a.get(), a.get(), t.get(), MPFR_RNDD);
        if (mpfr_cmp(h.hi(), a.get()) >= 0) return n;
    }
}

inline std::string to_decimal(const mpq_class& q, int digits = 6) {
    MpfrValue v(128);
    mpfr_set_q(v.get(), q.get_mpq_t(), MPFR_RNDN);
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*Rf", digits, v.get());
    return buf;
}

}  // namespace thrackle
