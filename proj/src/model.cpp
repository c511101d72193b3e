#include "hgame/model.hpp"

#include <algorithm>
#include <sstream>

namespace hgame {

const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ConflictingRelation: return "ConflictingRelation";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::IncompleteRelation: return "IncompleteRelation";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::MissingAgent: return "MissingAgent";
    case ErrorKind::DuplicateAgent: return "DuplicateAgent";
    case ErrorKind::AgentNotInCoalition: return "AgentNotInCoalition";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::RepMismatch: return "RepMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::LiteralCount: return "LiteralCount";
    case ErrorKind::FrequencyExceeded: return "FrequencyExceeded";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::BadProbabilities: return "BadProbabilities";
    case ErrorKind::Io: return "IoError";
    }
    return "Error";
}

GameInstance GameInstance::build(int n, const std::vector<Edge>& friends,
                                 const std::vector<Edge>& enemies, Mode mode)
{
    if (n < 0)
        throw Error(ErrorKind::OutOfRange, "negative agent count");
    GameInstance g;
    g.n_ = n;
    g.mode_ = mode;
    g.frow_.assign(n, Bits(n));
    g.erow_.assign(n, Bits(n));

    auto check = [n](const Edge& e) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw Error(ErrorKind::OutOfRange,
                        "agent out of range in pair (" + std::to_string(e.first + 1) + "," +
                            std::to_string(e.second + 1) + ")");
        if (e.first == e.second)
            throw Error(ErrorKind::OutOfRange,
                        "self relation for agent " + std::to_string(e.first + 1));
    };
    for (const auto& e : friends) {
        check(e);
        g.frow_[e.first].set(e.second);
        g.frow_[e.second].set(e.first);
    }
    for (const auto& e : enemies) {
        check(e);
        if (g.frow_[e.first][e.second])
            throw Error(ErrorKind::ConflictingRelation,
                        "pair (" + std::to_string(e.first + 1) + "," +
                            std::to_string(e.second + 1) + ") is both friend and enemy");
        g.erow_[e.first].set(e.second);
        g.erow_[e.second].set(e.first);
    }
    if (mode == Mode::Complete) {
        if (enemies.empty()) {
            for (int i = 0; i < n; ++i) {
                g.erow_[i] = ~g.frow_[i];
                g.erow_[i].reset(i);
            }
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!g.frow_[i][j] && !g.erow_[i][j])
                        throw Error(ErrorKind::IncompleteRelation,
                                    "complete mode: pair (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") has no relation");
        }
    }
    g.flist_.assign(n, {});
    g.elist_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        for (auto j = g.frow_[i].find_first(); j != Bits::npos; j = g.frow_[i].find_next(j))
            g.flist_[i].push_back(int(j));
        for (auto j = g.erow_[i].find_first(); j != Bits::npos; j = g.erow_[i].find_next(j))
            g.elist_[i].push_back(int(j));
    }
    return g;
}

Relation GameInstance::relation(int i, int j) const
{
    if (frow_[i][j]) return Relation::Friend;
    if (erow_[i][j]) return Relation::Enemy;
    return Relation::Neutral;
}

std::vector<Edge> GameInstance::friend_edges() const
{
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j : flist_[i])
            if (j > i) out.emplace_back(i, j);
    return out;
}

std::vector<Edge> GameInstance::enemy_edges() const
{
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j : elist_[i])
            if (j > i) out.emplace_back(i, j);
    return out;
}

void GameInstance::set_intervals(IntervalRep rep)
{
    if (int(rep.size()) != n_)
        throw Error(ErrorKind::RepMismatch, "interval count differs from agent count");
    for (const auto& iv : rep)
        if (iv.hi < iv.lo)
            throw Error(ErrorKind::RepMismatch, "interval with right endpoint before left");
    intervals_ = std::move(rep);
}

bool GameInstance::operator==(const GameInstance& o) const
{
    return n_ == o.n_ && mode_ == o.mode_ && frow_ == o.frow_ && erow_ == o.erow_ &&
           intervals_ == o.intervals_;
}

void Partition::canonicalize()
{
    for (auto& c : coalitions) std::sort(c.begin(), c.end());
    std::sort(coalitions.begin(), coalitions.end(),
              [](const Coalition& a, const Coalition& b) { return a.front() < b.front(); });
}

std::vector<int> Partition::owners(int n) const
{
    std::vector<int> own(n, -1);
    for (std::size_t c = 0; c < coalitions.size(); ++c)
        for (int a : coalitions[c]) own[a] = int(c);
    return own;
}

std::size_t Partition::max_size() const
{
    std::size_t m = 0;
    for (const auto& c : coalitions) m = std::max(m, c.size());
    return m;
}

bool Partition::operator==(const Partition& o) const
{
    Partition a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    return a.coalitions == b.coalitions;
}

void validate_partition(const Partition& p, int n)
{
    std::vector<char> seen(n, 0);
    for (const auto& c : p.coalitions) {
        if (c.empty()) throw Error(ErrorKind::InvalidPartition, "empty coalition");
        for (int a : c) {
            if (a < 0 || a >= n)
                throw Error(ErrorKind::OutOfRange, "agent " + std::to_string(a + 1) + " out of range");
            if (seen[a])
                throw Error(ErrorKind::DuplicateAgent, "agent " + std::to_string(a + 1) + " appears twice");
            seen[a] = 1;
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) throw Error(ErrorKind::MissingAgent, "agent " + std::to_string(i + 1) + " missing");
}

DegreeProfile degree_profile(const GameInstance& g)
{
    DegreeProfile d;
    for (int i = 0; i < g.size(); ++i) {
        int f = int(g.friend_list(i).size()), e = int(g.enemy_list(i).size());
        d.max_friend_degree = std::max(d.max_friend_degree, f);
        d.max_enemy_degree = std::max(d.max_enemy_degree, e);
        d.max_total_degree = std::max(d.max_total_degree, f + e);
    }
    return d;
}

IntervalTarget interval_target(const GameInstance& g)
{
    if (!g.intervals()) return IntervalTarget::None;
    const auto& rep = *g.intervals();
    bool fr = true, en = true;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            bool ov = std::max(rep[i].lo, rep[j].lo) <= std::min(rep[i].hi, rep[j].hi);
            fr = fr && ov == g.friends(i, j);
            en = en && ov == g.enemies(i, j);
        }
    if (fr) return IntervalTarget::Friends;
    if (en) return IntervalTarget::Enemies;
    return IntervalTarget::None;
}

Bits to_bits(const Coalition& c, int n)
{
    Bits b(n);
    for (int a : c) b.set(a);
    return b;
}

Coalition to_coalition(const Bits& b)
{
    Coalition c;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) c.push_back(int(i));
    return c;
}

std::string format_rational(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s)
{
    try {
        std::size_t slash = s.find('/');
        if (slash != std::string::npos)
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        std::size_t dot = s.find('.');
        if (dot == std::string::npos) {
            std::size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(v);
        }
        // exact decimal
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        long long den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        std::size_t used = 0;
        long long num = std::stoll(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(s);
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Syntax, "bad number '" + s + "'");
    }
}

namespace {

std::vector<std::string> split_ws(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& s, int lineno)
{
    std::size_t used = 0;
    long v;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw Error(ErrorKind::Syntax, "line " + std::to_string(lineno) + ": expected integer, got '" + s + "'");
    return int(v);
}

}  // namespace

GameInstance parse_instance(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::optional<Mode> mode;
    std::vector<Edge> friends, enemies;
    std::vector<std::optional<Interval>> ivs;
    bool any_iv = false;

    auto syntax = [&](const std::string& msg) {
        return Error(ErrorKind::Syntax, "line " + std::to_string(lineno) + ": " + msg);
    };
    auto agent = [&](const std::string& tok) {
        int a = parse_int(tok, lineno);
        if (a < 1 || a > n)
            throw Error(ErrorKind::OutOfRange,
                        "line " + std::to_string(lineno) + ": agent " + tok + " out of range");
        return a - 1;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "agents") {
            if (n >= 0) throw syntax("duplicate 'agents' line");
            if (toks.size() != 2) throw syntax("expected 'agents <n>'");
            n = parse_int(toks[1], lineno);
            if (n < 0) throw syntax("negative agent count");
            ivs.assign(n, std::nullopt);
            continue;
        }
        if (n < 0) throw syntax("'agents' line must come first");
        if (kw == "mode") {
            if (mode) throw syntax("duplicate 'mode' line");
            if (toks.size() != 2) throw syntax("expected 'mode complete|neutrals'");
            if (toks[1] == "complete") mode = Mode::Complete;
            else if (toks[1] == "neutrals") mode = Mode::WithNeutrals;
            else throw syntax("unknown mode '" + toks[1] + "'");
        } else if (kw == "friend" || kw == "enemy") {
            if (toks.size() != 3) throw syntax("expected '" + kw + " <i> <j>'");
            Edge e{agent(toks[1]), agent(toks[2])};
            if (e.first > e.second) std::swap(e.first, e.second);
            (kw == "friend" ? friends : enemies).push_back(e);
        } else if (kw == "interval") {
            if (toks.size() != 4) throw syntax("expected 'interval <i> <l> <r>'");
            int a = agent(toks[1]);
            if (ivs[a]) throw syntax("duplicate interval for agent " + toks[1]);
            ivs[a] = Interval{parse_rational(toks[2]), parse_rational(toks[3])};
            any_iv = true;
        } else {
            throw syntax("unknown keyword '" + kw + "'");
        }
    }
    if (n < 0) throw Error(ErrorKind::Syntax, "missing 'agents' line");
    if (!mode) throw Error(ErrorKind::Syntax, "missing 'mode' line");

    auto dup = [](std::vector<Edge> v, const char* what) {
        std::sort(v.begin(), v.end());
        auto it = std::adjacent_find(v.begin(), v.end());
        if (it != v.end())
            throw Error(ErrorKind::ConflictingRelation,
                        std::string(what) + " pair (" + std::to_string(it->first + 1) + "," +
                            std::to_string(it->second + 1) + ") listed twice");
    };
    dup(friends, "friend");
    dup(enemies, "enemy");

    GameInstance g = GameInstance::build(n, friends, enemies, *mode);
    if (any_iv) {
        IntervalRep rep;
        for (int i = 0; i < n; ++i) {
            if (!ivs[i])
                throw Error(ErrorKind::RepMismatch, "agent " + std::to_string(i + 1) + " has no interval");
            rep.push_back(*ivs[i]);
        }
        g.set_intervals(std::move(rep));
        if (interval_target(g) == IntervalTarget::None)
            throw Error(ErrorKind::RepMismatch,
                        "intervals represent neither the friendship nor the enemy graph");
    }
    return g;
}

std::string serialize_instance(const GameInstance& g)
{
    std::ostringstream out;
    out << "agents " << g.size() << "\n";
    out << "mode " << (g.mode() == Mode::Complete ? "complete" : "neutrals") << "\n";
    for (auto [i, j] : g.friend_edges()) out << "friend " << i + 1 << " " << j + 1 << "\n";
    // Complete mode: enemies are implied by the complement.
    if (g.mode() == Mode::WithNeutrals)
        for (auto [i, j] : g.enemy_edges()) out << "enemy " << i + 1 << " " << j + 1 << "\n";
    if (g.intervals()) {
        const auto& rep = *g.intervals();
        for (int i = 0; i < g.size(); ++i)
            out << "interval " << i + 1 << " " << format_rational(rep[i].lo) << " "
                << format_rational(rep[i].hi) << "\n";
    }
    return out.str();
}

Partition parse_partition(const std::string& text, int n)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Partition p;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        Coalition c;
        for (const auto& t : toks) {
            int a = parse_int(t, lineno);
            if (a < 1 || a > n)
                throw Error(ErrorKind::OutOfRange,
                            "line " + std::to_string(lineno) + ": agent " + t + " out of range");
            c.push_back(a - 1);
        }
        p.coalitions.push_back(std::move(c));
    }
    validate_partition(p, n);
    p.canonicalize();
    return p;
}

std::string serialize_partition(const Partition& p)
{
    Partition q = p;
    q.canonicalize();
    std::ostringstream out;
    for (const auto& c : q.coalitions) {
        for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k] + 1;
        out << "\n";
    }
    return out.str();
}

}  // namespace hgame
