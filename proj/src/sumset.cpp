#include "zsr/sumset.hpp"

#include "zsr/error.hpp"

#include <string>

namespace zsr {

SumsetWitness::SumsetWitness(int modulus, std::vector<std::optional<std::vector<std::size_t>>> choices)
    : modulus_(modulus), choices_(std::move(choices))
{
}

std::vector<Residue> SumsetWitness::achievable() const
{
    std::vector<Residue> out;
    for (int r = 0; r < modulus_; ++r)
        if (choices_[r])
            out.emplace_back(r, modulus_);
    return out;
}

bool SumsetWitness::contains(const Residue& r) const
{
    return r.modulus() == modulus_ && choices_[r.value()].has_value();
}

const std::optional<std::vector<std::size_t>>& SumsetWitness::choice(const Residue& r) const
{
    if (r.modulus() != modulus_)
        fail(ErrorKind::MixedModulus, "target in Z_" + std::to_string(r.modulus()));
    return choices_[r.value()];
}

SumsetWitness iterated_sumset(int modulus, std::span<const std::vector<Residue>> sets)
{
    if (!is_prime(modulus))
        fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(modulus) + " is not prime");
    struct Step {
        int prev;
        std::size_t element;
    };
    constexpr int unreached = -1;

    // back[i][r]: how residue r was first reached after consuming sets[0..i].
    std::vector<std::vector<Step>> back;
    back.reserve(sets.size());
    std::vector<bool> reached(modulus, false);
    reached[0] = true;

    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& set = sets[i];
        if (set.empty())
            fail(ErrorKind::EmptyInputSet, "input set " + std::to_string(i) + " is empty");

        std::vector<int> first_index(modulus, -1);
        std::vector<std::size_t> distinct;
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (set[j].modulus() != modulus)
                fail(ErrorKind::MixedModulus, "set " + std::to_string(i) + " holds an element of Z_" +
                                                  std::to_string(set[j].modulus()));
            if (first_index[set[j].value()] < 0) {
                first_index[set[j].value()] = static_cast<int>(j);
                distinct.push_back(j);
            }
        }

        std::vector<Step> layer(modulus, Step{unreached, 0});
        std::vector<bool> next(modulus, false);
        for (int r = 0; r < modulus; ++r) {
            if (!reached[r])
                continue;
            for (std::size_t j : distinct) {
                int s = (r + set[j].value()) % modulus;
                if (!next[s]) {
                    next[s] = true;
                    layer[s] = Step{r, j};
                }
            }
        }
        reached = std::move(next);
        back.push_back(std::move(layer));
    }

    std::vector<std::optional<std::vector<std::size_t>>> choices(modulus);
    for (int r = 0; r < modulus; ++r) {
        if (!reached[r])
            continue;
        std::vector<std::size_t> picks(sets.size());
        int cur = r;
        for (std::size_t i = sets.size(); i-- > 0;) {
            picks[i] = back[i][cur].element;
            cur = back[i][cur].prev;
        }
        choices[r] = std::move(picks);
    }
    return SumsetWitness(modulus, std::move(choices));
}

std::optional<std::vector<std::size_t>> target_choice(const SumsetWitness& w, const Residue& target)
{
    return w.choice(target);
}

} // namespace zsr
