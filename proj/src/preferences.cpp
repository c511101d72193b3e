#include "hgame/preferences.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hgame {

namespace {

bool contains(const Coalition& c, int a)
{
    return std::find(c.begin(), c.end(), a) != c.end();
}

void require_member(const Coalition& c, int a)
{
    if (!contains(c, a))
        throw Error(ErrorKind::AgentNotInCoalition,
                    "agent " + std::to_string(a + 1) + " is not in the coalition");
}

std::optional<BlockingCertificate> check(const GameInstance& g, const Partition& p,
                                         const Coalition& raw, bool weak)
{
    if (raw.empty()) throw Error(ErrorKind::InvalidPartition, "empty candidate coalition");
    validate_partition(p, g.size());
    Coalition c = raw;
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
        throw Error(ErrorKind::DuplicateAgent, "candidate coalition repeats an agent");
    for (int a : c)
        if (a < 0 || a >= g.size()) throw Error(ErrorKind::OutOfRange, "candidate agent out of range");

    auto own = p.owners(g.size());
    BlockingCertificate cert;
    cert.coalition = c;
    cert.weak = weak;
    for (int a : c) {
        Score before = score(g, a, p.coalitions[own[a]]);
        Score after = score(g, a, c);
        cert.per_agent.push_back({a, before, after});
        if (better(after, before)) cert.strict_improvers.push_back(a);
        else if (!weak || better(before, after)) return std::nullopt;
    }
    if (cert.strict_improvers.empty()) return std::nullopt;
    return cert;
}

}  // namespace

Score score(const GameInstance& g, int agent, const Coalition& c)
{
    require_member(c, agent);
    Score s;
    for (int b : c) {
        if (b == agent) continue;
        if (g.friends(agent, b)) ++s.friends;
        else if (g.enemies(agent, b)) ++s.enemies;
    }
    return s;
}

Score score_bits(const GameInstance& g, int agent, const Bits& c)
{
    return Score{int((g.enemy_row(agent) & c).count()), int((g.friend_row(agent) & c).count())};
}

bool prefers(const GameInstance& g, int agent, const Coalition& s1, const Coalition& s2)
{
    return better(score(g, agent, s1), score(g, agent, s2));
}

bool weakly_prefers(const GameInstance& g, int agent, const Coalition& s1, const Coalition& s2)
{
    return !prefers(g, agent, s2, s1);
}

std::optional<BlockingCertificate> is_blocking(const GameInstance& g, const Partition& p,
                                               const Coalition& c)
{
    return check(g, p, c, false);
}

std::optional<BlockingCertificate> is_weakly_blocking(const GameInstance& g, const Partition& p,
                                                      const Coalition& c)
{
    return check(g, p, c, true);
}

bool is_friendship_clique(const GameInstance& g, const Coalition& c)
{
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.friends(c[i], c[j])) return false;
    return true;
}

bool is_enemy_free(const GameInstance& g, const Coalition& c)
{
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (g.enemies(c[i], c[j])) return false;
    return true;
}

std::vector<Score> partition_scores(const GameInstance& g, const Partition& p)
{
    std::vector<Score> s(g.size());
    for (const auto& c : p.coalitions) {
        Bits b = to_bits(c, g.size());
        for (int a : c) s[a] = score_bits(g, a, b);
    }
    return s;
}

BlockingCertificate certify(const GameInstance& g, const Partition& p, const Coalition& c, bool weak)
{
    auto cert = weak ? is_weakly_blocking(g, p, c) : is_blocking(g, p, c);
    if (!cert) throw std::logic_error("internal: coalition does not block as claimed");
    return *cert;
}

std::string serialize_certificate(const BlockingCertificate& c)
{
    std::ostringstream out;
    out << "coalition";
    for (int a : c.coalition) out << ' ' << a + 1;
    out << "\nweak " << (c.weak ? 1 : 0) << '\n';
    for (const auto& e : c.per_agent) {
        out << "agent " << e.agent + 1 << " before " << e.before.enemies << ' ' << e.before.friends << " after "
            << e.after.enemies << ' ' << e.after.friends;
        if (std::find(c.strict_improvers.begin(), c.strict_improvers.end(), e.agent) != c.strict_improvers.end())
            out << " strict";
        out << '\n';
    }
    return out.str();
}

BlockingCertificate parse_certificate(const std::string& text, int n)
{
    BlockingCertificate c;
    std::istringstream in(text);
    std::string line;
    bool seen = false;
    auto agent = [&](int a) {
        if (a < 1 || a > n) throw Error(ErrorKind::OutOfRange, "certificate agent " + std::to_string(a));
        return a - 1;
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "coalition") {
            seen = true;
            int a;
            while (ls >> a) c.coalition.push_back(agent(a));
            if (!ls.eof()) throw Error(ErrorKind::Syntax, "certificate: bad coalition line: " + line);
            std::sort(c.coalition.begin(), c.coalition.end());
        } else if (key == "weak") {
            int w = 0;
            if (!(ls >> w)) throw Error(ErrorKind::Syntax, "certificate: bad weak line");
            c.weak = w != 0;
        } else if (key == "agent") {
            AgentEvidence e{};
            std::string b, a, strict;
            if (!(ls >> e.agent >> b >> e.before.enemies >> e.before.friends >> a >> e.after.enemies >>
                  e.after.friends) ||
                b != "before" || a != "after")
                throw Error(ErrorKind::Syntax, "certificate: bad agent line: " + line);
            e.agent = agent(e.agent);
            if (ls >> strict) {
                if (strict != "strict") throw Error(ErrorKind::Syntax, "certificate: bad agent line: " + line);
                c.strict_improvers.push_back(e.agent);
            }
            c.per_agent.push_back(e);
        }
    }
    if (!seen) throw Error(ErrorKind::Syntax, "certificate: no coalition line");
    return c;
}

}  // namespace hgame
