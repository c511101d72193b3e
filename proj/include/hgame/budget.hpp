#pragma once

#include "hgame/model.hpp"

#include <cstdint>
#include <cstdlib>

namespace hgame {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Node limit for exhaustive searches. HGAME_BUDGET overrides the default.
inline std::uint64_t default_budget()
{
    if (const char* env = std::getenv("HGAME_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

class Budget {
public:
    explicit Budget(std::uint64_t limit = default_budget()) : limit_(limit) {}

    void tick(std::uint64_t k = 1)
    {
        used_ += k;
        if (used_ > limit_)
            throw Error(ErrorKind::BudgetExceeded,
                        "search budget of " + std::to_string(limit_) + " nodes exhausted");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace hgame
