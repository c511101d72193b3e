#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgame {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Rational = boost::rational<long long>;
using Coalition = std::vector<int>;   // sorted, 0-based
using Edge = std::pair<int, int>;

enum class Mode { Complete, WithNeutrals };
enum class Relation { Neutral, Friend, Enemy };

enum class ErrorKind {
    ConflictingRelation,
    OutOfRange,
    IncompleteRelation,
    Syntax,
    MissingAgent,
    DuplicateAgent,
    AgentNotInCoalition,
    InvalidPartition,
    ModeMismatch,
    DegreeTooHigh,
    RepMismatch,
    BudgetExceeded,
    SizeGuard,
    LiteralCount,
    FrequencyExceeded,
    NotCubic,
    BadProbabilities,
    Io,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct Interval {
    Rational lo, hi;
    bool operator==(const Interval&) const = default;
};

// Closed intervals, one per agent.
using IntervalRep = std::vector<Interval>;

class GameInstance {
public:
    GameInstance() = default;

    // In Complete mode an empty enemy list means "derive the complement";
    // a non-empty one must equal the complement exactly.
    static GameInstance build(int n, const std::vector<Edge>& friends,
                              const std::vector<Edge>& enemies, Mode mode);

    int size() const { return n_; }
    Mode mode() const { return mode_; }

    Relation relation(int i, int j) const;
    bool friends(int i, int j) const { return frow_[i][j]; }
    bool enemies(int i, int j) const { return erow_[i][j]; }

    const Bits& friend_row(int i) const { return frow_[i]; }
    const Bits& enemy_row(int i) const { return erow_[i]; }
    const std::vector<int>& friend_list(int i) const { return flist_[i]; }
    const std::vector<int>& enemy_list(int i) const { return elist_[i]; }

    std::vector<Edge> friend_edges() const;
    std::vector<Edge> enemy_edges() const;

    const std::optional<IntervalRep>& intervals() const { return intervals_; }
    void set_intervals(IntervalRep rep);

    bool operator==(const GameInstance& o) const;

private:
    int n_ = 0;
    Mode mode_ = Mode::Complete;
    std::vector<Bits> frow_, erow_;
    std::vector<std::vector<int>> flist_, elist_;
    std::optional<IntervalRep> intervals_;
};

struct Partition {
    std::vector<Coalition> coalitions;

    // Sort members, order coalitions by smallest member.
    void canonicalize();
    // owner[i] = index of the coalition holding agent i.
    std::vector<int> owners(int n) const;
    std::size_t max_size() const;
    bool operator==(const Partition& o) const;
};

// Throws InvalidPartition / MissingAgent / DuplicateAgent.
void validate_partition(const Partition& p, int n);

struct DegreeProfile {
    int max_friend_degree = 0;
    int max_enemy_degree = 0;
    int max_total_degree = 0;
    bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile degree_profile(const GameInstance& g);

// Which relation graph the attached intervals represent.
enum class IntervalTarget { None, Friends, Enemies };
IntervalTarget interval_target(const GameInstance& g);

GameInstance parse_instance(const std::string& text);
std::string serialize_instance(const GameInstance& g);

Partition parse_partition(const std::string& text, int n);
std::string serialize_partition(const Partition& p);

Bits to_bits(const Coalition& c, int n);
Coalition to_coalition(const Bits& b);

std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace hgame
