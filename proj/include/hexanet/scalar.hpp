#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

#include "hexanet/error.hpp"
#include "hexanet/rng.hpp"

namespace hexanet {

using Rat = mpq_class;

enum class Ring { Rat, Gauss, Quat };

const char* ring_name(Ring r);
Ring ring_from_name(const std::string& name);  // "Q" | "C" | "H"

// Exact element of Q, Q(i) or H(Q): a + b i + c j + d k with rational
// components kept in lowest terms (GMP canonical form). The ring tag is
// part of the value; arithmetic never promotes across rings.
class Scalar {
public:
    Scalar() : ring_(Ring::Rat) {}
    explicit Scalar(Ring ring) : ring_(ring) {}
    Scalar(Ring ring, Rat a, Rat b = 0, Rat c = 0, Rat d = 0)
        : ring_(ring), c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        for (Rat& q : c_) q.canonicalize();  // lowest terms, positive denominator
        check_components();
    }

    static Scalar rational(Rat a) { return Scalar(Ring::Rat, std::move(a)); }
    static Scalar rational(long num, long den = 1) { return rational(Rat(num, den)); }
    static Scalar gauss(Rat a, Rat b) { return Scalar(Ring::Gauss, std::move(a), std::move(b)); }
    static Scalar quat(Rat a, Rat b, Rat c, Rat d) {
        return Scalar(Ring::Quat, std::move(a), std::move(b), std::move(c), std::move(d));
    }
    static Scalar zero(Ring ring) { return Scalar(ring); }
    static Scalar one(Ring ring) { return Scalar(ring, 1); }

    Ring ring() const { return ring_; }
    const Rat& re() const { return c_[0]; }
    const Rat& comp(int k) const { return c_[k]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_real() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    // The rational value of a real element; throws if imaginary parts remain.
    Rat to_rational() const {
        if (!is_real()) throw Error("scalar is not real: " + to_string());
        return c_[0];
    }

    // Re-tags the value into a larger ring; the numeric content must fit.
    Scalar embed(Ring target) const;

    Scalar conjugate() const { return Scalar(ring_, c_[0], -c_[1], -c_[2], -c_[3]); }

    // x + conj(x); always real.
    Scalar reduced_trace() const { return Scalar(ring_, 2 * c_[0]); }

    Rat norm_sq() const {
        return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
    }

    Scalar operator-() const { return Scalar(ring_, -c_[0], -c_[1], -c_[2], -c_[3]); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        Ring r = common_ring(x, y);
        return Scalar(r, x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2],
                      x.c_[3] + y.c_[3]);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        Ring r = common_ring(x, y);
        return Scalar(r, x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2],
                      x.c_[3] - y.c_[3]);
    }

    // Hamilton product; reduces to complex/rational multiplication when the
    // j,k components vanish. Non-commutative over Quat.
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        Ring r = common_ring(x, y);
        const Rat &a1 = x.c_[0], &b1 = x.c_[1], &c1 = x.c_[2], &d1 = x.c_[3];
        const Rat &a2 = y.c_[0], &b2 = y.c_[1], &c2 = y.c_[2], &d2 = y.c_[3];
        return Scalar(r,
                      a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                      a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                      a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                      a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2);
    }

    // x * y^{-1} (right division). Unambiguous in the commutative rings;
    // over Quat this is the convention used throughout.
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero scalar");
        Rat n = norm_sq();
        return Scalar(ring_, c_[0] / n, -c_[1] / n, -c_[2] / n, -c_[3] / n);
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.ring_ == y.ring_ && x.c_[0] == y.c_[0] && x.c_[1] == y.c_[1] &&
               x.c_[2] == y.c_[2] && x.c_[3] == y.c_[3];
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // "p/q", "p/q+r/s i", "p/q+r/s i+t/u j+v/w k", zero components omitted,
    // negative components rendered with a folded sign.
    std::string to_string() const;
    static Scalar parse(const std::string& text, Ring ring);

private:
    static Ring common_ring(const Scalar& x, const Scalar& y) {
        if (x.ring_ != y.ring_) throw RingMismatchError();
        return x.ring_;
    }
    void check_components() const {
        if (ring_ != Ring::Quat && (c_[2] != 0 || c_[3] != 0)) throw RingMismatchError();
        if (ring_ == Ring::Rat && c_[1] != 0) throw RingMismatchError();
    }

    Ring ring_;
    std::array<Rat, 4> c_{Rat(0), Rat(0), Rat(0), Rat(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Free-function forms of the member operations.
inline Scalar conjugate(const Scalar& x) { return x.conjugate(); }
inline Scalar reduced_trace(const Scalar& x) { return x.reduced_trace(); }
inline Scalar quat_mul(const Scalar& x, const Scalar& y) { return x * y; }
inline Rat norm_sq(const Scalar& x) { return x.norm_sq(); }

// Random rational p/q with p in [-20,20], q in [1,5]; nonzero_only resamples
// away p = 0.
Rat random_rational(Rng& rng, bool nonzero_only = false);
Scalar random_scalar(Ring ring, Rng& rng, bool nonzero_only = false);

}  // namespace hexanet
