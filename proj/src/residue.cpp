#include "zsr/residue.hpp"

#include "zsr/error.hpp"

#include <string>

namespace zsr {

bool is_prime(long long n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

Residue::Residue(long long value, int modulus) : value_(0), modulus_(modulus)
{
    if (!is_prime(modulus))
        fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(modulus) + " is not prime");
    long long r = value % modulus;
    if (r < 0)
        r += modulus;
    value_ = static_cast<int>(r);
}

namespace {

void require_same_modulus(const Residue& a, const Residue& b)
{
    if (a.modulus() != b.modulus())
        fail(ErrorKind::MixedModulus, "Z_" + std::to_string(a.modulus()) + " vs Z_" + std::to_string(b.modulus()));
}

} // namespace

Residue Residue::operator+(const Residue& other) const
{
    require_same_modulus(*this, other);
    return Residue(value_ + other.value_, modulus_);
}

Residue Residue::operator-(const Residue& other) const
{
    require_same_modulus(*this, other);
    return Residue(value_ - other.value_, modulus_);
}

Residue Residue::operator-() const
{
    return Residue(-value_, modulus_);
}

Residue& Residue::operator+=(const Residue& other)
{
    *this = *this + other;
    return *this;
}

Residue sum(std::span<const Residue> terms, int modulus)
{
    Residue total = Residue::zero(modulus);
    for (const auto& t : terms)
        total += t;
    return total;
}

} // namespace zsr
