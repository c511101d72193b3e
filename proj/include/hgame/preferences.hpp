#pragma once

#include "hgame/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hgame {

struct Score {
    int enemies = 0;
    int friends = 0;
    bool operator==(const Score&) const = default;
};

// a strictly better than b: fewer enemies, then more friends.
inline bool better(Score a, Score b)
{
    return a.enemies < b.enemies || (a.enemies == b.enemies && a.friends > b.friends);
}
inline bool at_least(Score a, Score b) { return !better(b, a); }

struct AgentEvidence {
    int agent;
    Score before, after;
};

struct BlockingCertificate {
    Coalition coalition;
    std::vector<int> strict_improvers;
    std::vector<AgentEvidence> per_agent;
    bool weak = false;  // true: only weakly blocking is claimed
};

Score score(const GameInstance& g, int agent, const Coalition& c);
// Same, without the membership check; c given as a bitset.
Score score_bits(const GameInstance& g, int agent, const Bits& c);

bool prefers(const GameInstance& g, int agent, const Coalition& s1, const Coalition& s2);
bool weakly_prefers(const GameInstance& g, int agent, const Coalition& s1, const Coalition& s2);

std::optional<BlockingCertificate> is_blocking(const GameInstance& g, const Partition& p,
                                               const Coalition& c);
std::optional<BlockingCertificate> is_weakly_blocking(const GameInstance& g, const Partition& p,
                                                      const Coalition& c);

bool is_friendship_clique(const GameInstance& g, const Coalition& c);
bool is_enemy_free(const GameInstance& g, const Coalition& c);

// Scores of every agent in its own coalition.
std::vector<Score> partition_scores(const GameInstance& g, const Partition& p);

// Builds the certificate for a coalition already known to (weakly) block;
// throws std::logic_error if it does not.
BlockingCertificate certify(const GameInstance& g, const Partition& p, const Coalition& c,
                            bool weak);

// Text form used by the CLI, 1-based:
//   coalition 2 3
//   weak 1
//   agent 2 before 0 0 after 0 1 strict      (enemies, friends)
std::string serialize_certificate(const BlockingCertificate& c);
// Reads the block back; lines starting with anything else are skipped, so
// the CLI's verdict line may stay in front. Throws Syntax / OutOfRange.
BlockingCertificate parse_certificate(const std::string& text, int n);

}  // namespace hgame
