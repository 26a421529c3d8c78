#pragma once

#include <span>

namespace zsr {

/// Deterministic trial-division primality test.
bool is_prime(long long n) noexcept;

/// An element of Z_p for a prime p. Values are normalized into [0, p) on construction.
class Residue {
public:
    Residue(long long value, int modulus);

    static Residue zero(int modulus) { return Residue(0, modulus); }

    int value() const noexcept { return value_; }
    int modulus() const noexcept { return modulus_; }

    Residue operator+(const Residue& other) const;
    Residue operator-(const Residue& other) const;
    Residue operator-() const;
    Residue& operator+=(const Residue& other);

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    int value_;
    int modulus_;
};

/// Sum of a list of residues; an empty list sums to zero in Z_modulus.
Residue sum(std::span<const Residue> terms, int modulus);

} // namespace zsr
