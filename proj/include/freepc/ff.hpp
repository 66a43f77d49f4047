#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "freepc/rng.hpp"

namespace freepc {

// Deterministic trial division; sufficient for moduli below 2^31.
inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

// The prime field GF(p). Construction validates the modulus once; everything
// downstream trusts it.
class FieldSpec {
public:
    explicit FieldSpec(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
            throw std::invalid_argument("field modulus must be a prime in [2, 2^31): got " +
                                        std::to_string(p));
        }
    }

    std::uint32_t p() const noexcept { return p_; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint32_t p_;
};

// Canonical residue in GF(p): 0 <= value < p, always. Arithmetic between
// scalars of different fields is rejected.
class Scalar {
public:
    Scalar(const FieldSpec& spec, std::uint64_t value)
        : v_(static_cast<std::uint32_t>(value % spec.p())), p_(spec.p()) {}

    std::uint32_t value() const noexcept { return v_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_same_field(a, b);
        std::uint64_t s = std::uint64_t(a.v_) + b.v_;
        if (s >= a.p_) s -= a.p_;
        return Scalar(static_cast<std::uint32_t>(s), a.p_, trusted{});
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check_same_field(a, b);
        std::uint64_t s = std::uint64_t(a.v_) + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return Scalar(static_cast<std::uint32_t>(s), a.p_, trusted{});
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_same_field(a, b);
        std::uint64_t s = std::uint64_t(a.v_) * b.v_ % a.p_;
        return Scalar(static_cast<std::uint32_t>(s), a.p_, trusted{});
    }

    Scalar operator-() const {
        return Scalar(v_ == 0 ? 0 : p_ - v_, p_, trusted{});
    }

    // Multiplicative inverse via extended Euclid. Zero has none.
    Scalar inverse() const {
        if (v_ == 0) {
            throw std::domain_error("zero has no inverse in GF(" + std::to_string(p_) + ")");
        }
        std::int64_t old_r = v_, r = p_;
        std::int64_t old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t q = old_r / r;
            std::int64_t t = old_r - q * r;
            old_r = r;
            r = t;
            t = old_s - q * s;
            old_s = s;
            s = t;
        }
        if (old_s < 0) old_s += p_;
        return Scalar(static_cast<std::uint32_t>(old_s), p_, trusted{});
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

private:
    struct trusted {};
    Scalar(std::uint32_t v, std::uint32_t p, trusted) : v_(v), p_(p) {}

    static void check_same_field(const Scalar& a, const Scalar& b) {
        if (a.p_ != b.p_) {
            throw std::invalid_argument("scalars belong to different fields: GF(" +
                                        std::to_string(a.p_) + ") vs GF(" +
                                        std::to_string(b.p_) + ")");
        }
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

inline Scalar zero_scalar(const FieldSpec& spec) { return Scalar(spec, 0); }
inline Scalar one_scalar(const FieldSpec& spec) { return Scalar(spec, 1); }

// Uniform over [0, p), or [1, p) when nonzero is set.
inline Scalar random_scalar(const FieldSpec& spec, bool nonzero, Rng& rng) {
    if (nonzero) {
        return Scalar(spec, 1 + uniform_below(rng, spec.p() - 1));
    }
    return Scalar(spec, uniform_below(rng, spec.p()));
}

}  // namespace freepc
