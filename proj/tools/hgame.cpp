// Batch front-end. The first stdout line is always the verdict (or the
// payload itself for `solve` and `gen`); exit codes:
//   0 stable / yes / ok, 1 usage, 2 I/O or validation, 3 blocked / no,
//   4 budget exhausted or size guard.

#include "hgame/core.hpp"
#include "hgame/generators.hpp"
#include "hgame/neutral.hpp"
#include "hgame/oracle.hpp"
#include "hgame/sources.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace hgame;
using json = nlohmann::json;

namespace {

constexpr int kOk = 0, kUsage = 1, kInvalid = 2, kNo = 3, kBudget = 4;

std::string read_file(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorKind::Io, "cannot write " + path);
}

json to_json(const Coalition& c)
{
    json a = json::array();
    for (int x : c) a.push_back(x + 1);
    return a;
}

json to_json(const Partition& p)
{
    Partition q = p;
    q.canonicalize();
    json a = json::array();
    for (const auto& c : q.coalitions) a.push_back(to_json(c));
    return a;
}

json to_json(const BlockingCertificate& c)
{
    json agents = json::array();
    for (const auto& e : c.per_agent) {
        bool strict = std::find(c.strict_improvers.begin(), c.strict_improvers.end(), e.agent) !=
                      c.strict_improvers.end();
        agents.push_back({{"agent", e.agent + 1},
                          {"before", {{"enemies", e.before.enemies}, {"friends", e.before.friends}}},
                          {"after", {{"enemies", e.after.enemies}, {"friends", e.after.friends}}},
                          {"strict", strict}});
    }
    return {{"coalition", to_json(c.coalition)}, {"weak", c.weak}, {"agents", agents}};
}

// One report, printed either as text or as a single JSON object.
struct Report {
    json j;
    std::string text;
    int code = kOk;
};

struct Options {
    bool as_json = false;
    std::optional<std::uint64_t> budget;
    Budget make_budget() const { return Budget(budget.value_or(default_budget())); }
};

std::optional<Strategy> strategy_from(const std::string& s)
{
    for (Strategy x : {Strategy::Generic, Strategy::IntervalFriend, Strategy::IntervalEnemy,
                       Strategy::BipartiteFriend, Strategy::BipartiteEnemy, Strategy::EnemyDegree2,
                       Strategy::FriendDegree3})
        if (s == to_string(x)) return x;
    return std::nullopt;
}

Strategy need_strategy(const std::string& s)
{
    auto x = strategy_from(s);
    if (!x) throw CLI::ValidationError("--strategy", "unknown strategy " + s);
    return *x;
}

void require_complete(const GameInstance& g, const std::string& problem)
{
    if (g.mode() != Mode::Complete)
        throw Error(ErrorKind::ModeMismatch, problem + " needs a Complete instance; use " + problem + "-n");
}

Report stability_report(const std::string& command, const std::string& problem,
                        const std::optional<BlockingCertificate>& cert)
{
    Report r;
    r.j = {{"command", command}, {"problem", problem}};
    if (!cert) {
        r.j["verdict"] = "STABLE";
        r.text = "STABLE\n";
        return r;
    }
    r.j["verdict"] = "BLOCKED";
    r.j["certificate"] = to_json(*cert);
    r.text = "BLOCKED\n" + serialize_certificate(*cert);
    r.code = kNo;
    return r;
}

Report existence_report(const std::string& command, const std::string& problem,
                        const std::optional<Partition>& p)
{
    Report r;
    r.j = {{"command", command}, {"problem", problem}};
    if (!p) {
        r.j["verdict"] = "NO";
        r.text = "NO\n";
        r.code = kNo;
        return r;
    }
    r.j["verdict"] = "YES";
    r.j["partition"] = to_json(*p);
    r.text = "YES\n" + serialize_partition(*p);
    return r;
}

// ---- solve / verify / exists -------------------------------------------

Report cmd_solve(const std::string& instance, const std::string& strategy)
{
    auto g = parse_instance(read_file(instance));
    Strategy s = strategy.empty() ? dispatch_strategy(g, Problem::CF) : need_strategy(strategy);
    Partition p = solve_cf(g, s);
    Report r;
    r.j = {{"command", "solve"}, {"problem", "cf"}, {"verdict", "OK"}, {"strategy", to_string(s)},
           {"partition", to_json(p)}};
    r.text = serialize_partition(p);
    return r;
}

Report cmd_verify(const std::string& problem, const std::string& instance, const std::string& partition,
                  const Options& o)
{
    auto g = parse_instance(read_file(instance));
    auto p = parse_partition(read_file(partition), g.size());
    bool weak = problem == "scv";
    std::optional<BlockingCertificate> cert;
    if (g.mode() == Mode::Complete) {
        cert = weak ? verify_scv(g, p) : verify_cv(g, p);
    } else {
        Budget b = o.make_budget();
        cert = find_blocking_neutral(g, p, weak, b);
    }
    return stability_report("verify", problem, cert);
}

Report cmd_exists(const std::string& problem, const std::string& instance, std::optional<int> max_parts,
                  std::optional<int> max_coal, const std::string& strategy, const Options& o)
{
    auto g = parse_instance(read_file(instance));
    Budget b = o.make_budget();
    std::optional<Partition> out;
    bool strict = problem == "sce" || problem == "sce-n";
    bool neutral = problem.ends_with("-n");
    if (neutral || (max_parts && max_coal)) {
        if (!neutral) require_complete(g, problem);
        out = strict ? exists_sce_neutral_bounded(g, max_parts, max_coal, b)
                     : exists_ce_neutral_bounded(g, max_parts, max_coal, b);
    } else {
        require_complete(g, problem);
        if (max_parts)
            out = strict ? exists_sce_bounded_partitions(g, *max_parts, b)
                         : exists_ce_bounded_partitions(g, *max_parts, b);
        else if (max_coal)
            out = strict ? exists_sce_bounded_coalition(g, *max_coal) : exists_ce_bounded_coalition(g, *max_coal);
        else if (strict)
            out = strategy.empty() ? exists_sce(g) : exists_sce(g, need_strategy(strategy));
        else
            out = solve_cf(g);  // a core stable partition always exists without neutrals
    }
    Report r = existence_report("exists", problem, out);
    r.j["nodes"] = b.used();
    return r;
}

// ---- gen ---------------------------------------------------------------

struct GenArgs {
    std::string kind, input;
    int k = 3;
    bool strict = false;
    std::string variant = "two";
    int n = 6;
    double p_friend = 0.5, p_enemy = 0.5;
    std::uint64_t seed = 1;
    std::string mode = "neutral";
    std::string out, partition_out;
};

X3cVariant variant_from(const std::string& v)
{
    if (v == "two") return X3cVariant::TwoPartitions;
    if (v == "small") return X3cVariant::SmallCoalitions;
    throw CLI::ValidationError("--variant", "expected two or small");
}

Report cmd_gen(const GenArgs& a)
{
    auto need_input = [&] {
        if (a.input.empty()) throw CLI::ValidationError("input", "gen " + a.kind + " needs an input file");
        return read_file(a.input);
    };
    Gadget gd;
    const std::string& k = a.kind;
    if (k == "fig2") gd = gen_fig2();
    else if (k == "3col") gd = gen_3col_to_ce3(parse_edge_list(need_input()), a.k);
    else if (k == "tripack") gd = gen_tripack_to_sce(parse_edge_list(need_input()));
    else if (k == "3sat-cv") gd = gen_3sat_to_cv(parse_dimacs(need_input()), a.strict);
    else if (k == "is-cv3") gd = gen_is_to_cv3(parse_edge_list(need_input()), a.k).gadget;
    else if (k == "3sat-ce-n") gd = gen_3sat_to_ce_neutral(parse_dimacs(need_input()));
    else if (k == "x3c-sce-n") gd = gen_x3c_to_sce_neutral(parse_x3c(need_input()));
    else if (k == "x3c-cv-n") gd = gen_x3c_to_cv_neutral(parse_x3c(need_input()), variant_from(a.variant));
    else if (k == "x3c-scv-n") gd = gen_x3c_to_scv_neutral(parse_x3c(need_input()), variant_from(a.variant));
    else if (k == "random") {
        Mode m = a.mode == "complete" ? Mode::Complete : Mode::WithNeutrals;
        if (a.mode != "complete" && a.mode != "neutral")
            throw CLI::ValidationError("--mode", "expected complete or neutral");
        gd.game = gen_random(a.n, a.p_friend, a.p_enemy, a.seed, m);
    } else
        throw CLI::ValidationError("kind", "unknown generator " + k);

    std::string inst = gd.names.empty() ? serialize_instance(gd.game) : serialize_gadget(gd);
    Report r;
    r.j = {{"command", "gen"}, {"kind", k}, {"verdict", "OK"}, {"agents", gd.game.size()}, {"instance", inst}};
    if (gd.partition) r.j["partition"] = to_json(*gd.partition);
    if (!gd.names.empty()) r.j["names"] = gd.names;
    if (!a.out.empty()) write_file(a.out, inst);
    else r.text = inst;
    if (!a.partition_out.empty()) {
        if (!gd.partition) throw CLI::ValidationError("--partition-out", k + " has no initial partition");
        write_file(a.partition_out, serialize_partition(*gd.partition));
    }
    return r;
}

// ---- oracle ------------------------------------------------------------

Report cmd_oracle(const std::string& shape, const std::vector<std::string>& files, std::optional<int> max_parts,
                  std::optional<int> max_coal, int k)
{
    auto file = [&](std::size_t i) {
        if (files.size() <= i) throw CLI::ValidationError("files", "oracle " + shape + " needs more inputs");
        return read_file(files[i]);
    };
    auto yes_no = [&](bool yes, json witness, std::string witness_text) {
        Report r;
        r.j = {{"command", "oracle"}, {"problem", shape}, {"verdict", yes ? "YES" : "NO"}};
        r.text = yes ? "YES\n" + witness_text : "NO\n";
        if (yes) r.j["witness"] = witness;
        r.code = yes ? kOk : kNo;
        return r;
    };
    if (shape == "cv" || shape == "scv") {
        auto g = parse_instance(file(0));
        auto p = parse_partition(file(1), g.size());
        auto c = brute_stability(g, p, shape == "scv");
        std::optional<BlockingCertificate> cert;
        if (c) cert = certify(g, p, *c, shape == "scv");
        auto r = stability_report("oracle", shape, cert);
        return r;
    }
    if (shape == "ce" || shape == "sce" || shape == "ce-n" || shape == "sce-n") {
        auto g = parse_instance(file(0));
        auto p = brute_exists(g, shape.starts_with("sce"), BruteBounds{max_parts, max_coal});
        return existence_report("oracle", shape, p);
    }
    if (shape == "sat") {
        auto f = parse_dimacs(file(0));
        auto a = brute_sat3(f);
        std::string t;
        json w = json::array();
        if (a)
            for (int v = 0; v < f.n_vars; ++v) {
                int lit = (*a)[v] ? v + 1 : -(v + 1);
                w.push_back(lit);
                t += std::to_string(lit) + (v + 1 < f.n_vars ? " " : "\n");
            }
        return yes_no(bool(a), w, t);
    }
    if (shape == "3col") {
        auto c = brute_3coloring(parse_edge_list(file(0)));
        std::string t;
        json w = json::array();
        if (c)
            for (std::size_t v = 0; v < c->size(); ++v) {
                w.push_back((*c)[v] + 1);
                t += std::to_string((*c)[v] + 1) + (v + 1 < c->size() ? " " : "\n");
            }
        return yes_no(bool(c), w, t);
    }
    if (shape == "tripack") {
        auto t = brute_triangle_partition(parse_edge_list(file(0)));
        Partition p;
        if (t) p.coalitions = *t;
        return yes_no(bool(t), to_json(p), t ? serialize_partition(p) : "");
    }
    if (shape == "x3c") {
        auto c = brute_exact_cover(parse_x3c(file(0)));
        std::string t;
        json w = json::array();
        if (c)
            for (std::size_t i = 0; i < c->size(); ++i) {
                w.push_back((*c)[i] + 1);
                t += std::to_string((*c)[i] + 1) + (i + 1 < c->size() ? " " : "\n");
            }
        return yes_no(bool(c), w, t);
    }
    if (shape == "is") {
        auto s = brute_independent_set(parse_edge_list(file(0)), k);
        return yes_no(bool(s), s ? to_json(*s) : json(), s ? serialize_partition(Partition{{*s}}) : "");
    }
    throw CLI::ValidationError("shape", "unknown oracle " + shape);
}

// ---- validate ----------------------------------------------------------

Report cmd_validate(const std::string& instance)
{
    auto g = parse_instance(read_file(instance));
    auto d = degree_profile(g);
    bool fb = bipartition(friend_graph(g)).side.has_value();
    bool eb = bipartition(enemy_graph(g)).side.has_value();
    auto it = interval_target(g);
    const char* iv = it == IntervalTarget::Friends ? "friends" : it == IntervalTarget::Enemies ? "enemies" : "none";
    const char* mode = g.mode() == Mode::Complete ? "complete" : "neutral";

    Report r;
    r.j = {{"command", "validate"},
           {"verdict", "VALID"},
           {"agents", g.size()},
           {"mode", mode},
           {"max_friend_degree", d.max_friend_degree},
           {"max_enemy_degree", d.max_enemy_degree},
           {"max_total_degree", d.max_total_degree},
           {"friend_graph_bipartite", fb},
           {"enemy_graph_bipartite", eb},
           {"intervals", iv}};
    std::ostringstream t;
    t << "VALID\n"
      << "agents " << g.size() << "\nmode " << mode << "\nmax_friend_degree " << d.max_friend_degree
      << "\nmax_enemy_degree " << d.max_enemy_degree << "\nmax_total_degree " << d.max_total_degree
      << "\nfriend_graph_bipartite " << (fb ? "yes" : "no") << "\nenemy_graph_bipartite " << (eb ? "yes" : "no")
      << "\nintervals " << iv << "\n";
    if (g.mode() == Mode::Complete) {
        json strategies = json::object();
        for (auto [name, pr] : {std::pair{"cf", Problem::CF}, {"cv", Problem::CV}, {"sce", Problem::SCE},
                                {"scv", Problem::SCV}}) {
            const char* s = to_string(dispatch_strategy(g, pr));
            strategies[name] = s;
            t << "strategy " << name << ' ' << s << "\n";
        }
        r.j["strategies"] = strategies;
    }
    r.text = t.str();
    return r;
}

int exit_code(ErrorKind k)
{
    return k == ErrorKind::BudgetExceeded || k == ErrorKind::SizeGuard ? kBudget : kInvalid;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hedonic games with enemy-oriented preferences"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit one JSON object instead of text");
    app.add_option("--budget", opt.budget, "search node budget (default: HGAME_BUDGET or 1e7)");

    std::string instance, partition, strategy, problem;
    std::optional<int> max_parts, max_coal;

    auto* solve = app.add_subcommand("solve", "core stable partition without neutrals");
    solve->add_option("problem", problem)->required()->check(CLI::IsMember({"cf"}));
    solve->add_option("instance", instance)->required();
    solve->add_option("--strategy", strategy);

    auto* verify = app.add_subcommand("verify", "is a partition (strictly) core stable");
    verify->add_option("problem", problem)->required()->check(CLI::IsMember({"cv", "scv"}));
    verify->add_option("instance", instance)->required();
    verify->add_option("partition", partition)->required();

    auto* exists = app.add_subcommand("exists", "does a (strictly) core stable partition exist");
    exists->add_option("problem", problem)->required()->check(CLI::IsMember({"sce", "ce", "sce-n", "ce-n"}));
    exists->add_option("instance", instance)->required();
    exists->add_option("--max-partitions", max_parts)->check(CLI::PositiveNumber);
    exists->add_option("--max-coalition", max_coal)->check(CLI::PositiveNumber);
    exists->add_option("--strategy", strategy);

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "emit a reduction gadget or a random instance");
    gen->add_option("kind", ga.kind)
        ->required()
        ->check(CLI::IsMember({"fig2", "3col", "tripack", "3sat-cv", "is-cv3", "3sat-ce-n", "x3c-sce-n", "x3c-cv-n",
                               "x3c-scv-n", "random"}));
    gen->add_option("input", ga.input, "source instance (edge list, DIMACS or x3c)");
    gen->add_option("-k,--k", ga.k, "colours (3col) or independent-set size (is-cv3)");
    gen->add_flag("--strict", ga.strict, "strict variant (3sat-cv)");
    gen->add_option("--variant", ga.variant, "two | small (x3c-cv-n, x3c-scv-n)");
    gen->add_option("-n,--agents", ga.n, "agents (random)");
    gen->add_option("--p-friend", ga.p_friend);
    gen->add_option("--p-enemy", ga.p_enemy);
    gen->add_option("--seed", ga.seed);
    gen->add_option("--mode", ga.mode, "complete | neutral (random)");
    gen->add_option("-o,--out", ga.out, "instance file (default stdout)");
    gen->add_option("--partition-out", ga.partition_out, "initial partition file");

    std::string shape;
    std::vector<std::string> files;
    int oracle_k = 0;
    auto* oracle = app.add_subcommand("oracle", "brute-force verdicts for cross-checking");
    oracle->add_option("shape", shape)
        ->required()
        ->check(CLI::IsMember({"cv", "scv", "ce", "sce", "ce-n", "sce-n", "sat", "3col", "tripack", "x3c", "is"}));
    oracle->add_option("files", files)->required();
    oracle->add_option("--max-partitions", max_parts)->check(CLI::PositiveNumber);
    oracle->add_option("--max-coalition", max_coal)->check(CLI::PositiveNumber);
    oracle->add_option("-k,--k", oracle_k, "independent-set size");

    auto* validate = app.add_subcommand("validate", "parse and describe an instance");
    validate->add_option("instance", instance)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    Report r;
    try {
        if (*solve) r = cmd_solve(instance, strategy);
        else if (*verify) r = cmd_verify(problem, instance, partition, opt);
        else if (*exists) r = cmd_exists(problem, instance, max_parts, max_coal, strategy, opt);
        else if (*gen) r = cmd_gen(ga);
        else if (*oracle) r = cmd_oracle(shape, files, max_parts, max_coal, oracle_k);
        else r = cmd_validate(instance);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        if (opt.as_json)
            std::cout << json{{"verdict", "ERROR"}, {"error", to_string(e.kind())}, {"message", e.what()}}.dump()
                      << "\n";
        std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    if (opt.as_json) std::cout << r.j.dump() << "\n";
    else std::cout << r.text;
    return r.code;
}
