#include "hgame/sources.hpp"

#include <set>
#include <sstream>

namespace hgame {

namespace {

[[noreturn]] void syntax(int line, const std::string& msg)
{
    throw Error(ErrorKind::Syntax, "line " + std::to_string(line) + ": " + msg);
}

std::string strip(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text)
{
    CnfFormula f;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0, declared = -1;
    bool header = false;
    std::vector<int> pending;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> f.n_vars >> declared) || cnf != "cnf" || f.n_vars < 0 || declared < 0)
                syntax(lineno, "bad problem line");
            header = true;
            continue;
        }
        if (!header) syntax(lineno, "clause before problem line");
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3) syntax(lineno, "clause does not have exactly 3 literals");
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                if (lit > f.n_vars || -lit > f.n_vars) syntax(lineno, "literal out of range");
                pending.push_back(int(lit));
            }
        }
        if (!ls.eof()) syntax(lineno, "bad token");
    }
    if (!header) syntax(lineno, "missing problem line");
    if (!pending.empty()) syntax(lineno, "unterminated clause");
    if (int(f.clauses.size()) != declared) syntax(lineno, "clause count differs from header");
    return f;
}

std::string serialize_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.n_vars << " " << f.clauses.size() << "\n";
    for (const auto& c : f.clauses) out << c[0] << " " << c[1] << " " << c[2] << " 0\n";
    return out.str();
}

UGraph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    std::string raw;
    int lineno = 0, n = -1;
    std::vector<Edge> edges;
    int maxv = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (line.rfind("vertices", 0) == 0) {
            std::string kw;
            if (!(ls >> kw >> n) || n < 0) syntax(lineno, "bad vertices line");
            continue;
        }
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) syntax(lineno, "expected two vertex ids");
        if (u < 1 || v < 1 || u == v) syntax(lineno, "bad edge");
        edges.emplace_back(u - 1, v - 1);
        maxv = std::max({maxv, u, v});
    }
    if (n < 0) n = maxv;
    if (maxv > n) throw Error(ErrorKind::OutOfRange, "edge endpoint exceeds vertex count");
    return UGraph::from_edges(n, edges);
}

std::string serialize_edge_list(const UGraph& g)
{
    std::ostringstream out;
    out << "vertices " << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

X3cInstance parse_x3c(const std::string& text)
{
    X3cInstance x;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "elements") {
            if (!(ls >> x.n_elements) || x.n_elements < 0 || x.n_elements % 3 != 0)
                syntax(lineno, "element count must be a multiple of 3");
            header = true;
        } else if (kw == "set") {
            if (!header) syntax(lineno, "set before elements line");
            std::array<int, 3> s{};
            std::string extra;
            if (!(ls >> s[0] >> s[1] >> s[2]) || (ls >> extra)) syntax(lineno, "a set has exactly 3 elements");
            std::set<int> uniq(s.begin(), s.end());
            if (uniq.size() != 3) syntax(lineno, "repeated element in set");
            for (int& e : s) {
                if (e < 1 || e > x.n_elements) syntax(lineno, "element out of range");
                --e;
            }
            std::sort(s.begin(), s.end());
            x.sets.push_back(s);
        } else {
            syntax(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!header) syntax(lineno, "missing elements line");
    return x;
}

std::string serialize_x3c(const X3cInstance& x)
{
    std::ostringstream out;
    out << "elements " << x.n_elements << "\n";
    for (const auto& s : x.sets) out << "set " << s[0] + 1 << " " << s[1] + 1 << " " << s[2] + 1 << "\n";
    return out.str();
}

std::vector<std::array<int, 2>> literal_occurrences(const CnfFormula& f)
{
    std::vector<std::array<int, 2>> occ(std::size_t(f.n_vars) + 1, {0, 0});
    for (const auto& c : f.clauses)
        for (int l : c) ++occ[std::abs(l)][l < 0 ? 1 : 0];
    return occ;
}

}  // namespace hgame
