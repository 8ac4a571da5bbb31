#include "enumfpt/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "enumfpt/error.hpp"

namespace enumfpt {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error("parse-error", "line " + std::to_string(line) + ": " + what);
}

bool skippable(const std::string& line) {
    if (line.empty()) return true;
    if (line[0] == 'c' || line[0] == '%') return true;
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long n = -1, m = -1;
    Graph g;
    long edges_seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            if (n >= 0) parse_fail(lineno, "duplicate header");
            std::string fmt;
            if (!(fields >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                parse_fail(lineno, "expected 'p edge <n> <m>'");
            g = Graph::with_vertices(static_cast<int>(n));
        } else if (tag == "e") {
            if (n < 0) parse_fail(lineno, "edge before header");
            long u, v;
            if (!(fields >> u >> v)) parse_fail(lineno, "expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n) parse_fail(lineno, "vertex id out of range");
            if (u == v) parse_fail(lineno, "self-loop");
            ++edges_seen;
            if (!g.has_edge(static_cast<int>(u), static_cast<int>(v)))
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } else {
            parse_fail(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) parse_fail(lineno, "missing 'p edge' header");
    if (edges_seen != m)
        parse_fail(lineno, "header announces " + std::to_string(m) + " edges, found " +
                               std::to_string(edges_seen));
    return g;
}

CnfFormula parse_cnf(std::istream& in, int max_clause_width) {
    std::string line;
    std::size_t lineno = 0;
    long declared_vars = -1, declared_clauses = -1;
    CnfFormula phi;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        if (declared_vars < 0) {
            std::string tag, fmt;
            fields >> tag;
            if (tag != "p") parse_fail(lineno, "clause before header");
            if (!(fields >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf" ||
                declared_vars < 0 || declared_clauses < 0)
                parse_fail(lineno, "expected 'p cnf <vars> <clauses>'");
            continue;
        }
        long lit;
        while (fields >> lit) {
            if (lit == 0) {
                try {
                    phi.clauses.push_back(make_clause(pending));
                } catch (const Error& e) {
                    parse_fail(lineno, e.what());
                }
                if (max_clause_width >= 0 &&
                    static_cast<int>(phi.clauses.back().literals.size()) > max_clause_width)
                    throw Error("invariant-violation",
                                "line " + std::to_string(lineno) + ": clause width exceeds " +
                                    std::to_string(max_clause_width));
                pending.clear();
            } else {
                if (std::abs(lit) > declared_vars)
                    parse_fail(lineno, "variable id out of range");
                pending.push_back(static_cast<int>(lit));
            }
        }
        std::string leftover;
        if (fields.clear(), fields >> leftover) parse_fail(lineno, "unexpected token");
    }
    if (declared_vars < 0) parse_fail(lineno, "missing 'p cnf' header");
    if (!pending.empty()) parse_fail(lineno, "unterminated clause");
    if (static_cast<long>(phi.clauses.size()) != declared_clauses)
        parse_fail(lineno, "header announces " + std::to_string(declared_clauses) +
                               " clauses, found " + std::to_string(phi.clauses.size()));
    return phi;
}

StringInstance parse_strings(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    long count = -1, n = -1, d = -1;
    StringInstance x;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        if (count < 0) {
            if (!(fields >> count >> n >> d) || count < 1 || n < 1 || d < 0)
                parse_fail(lineno, "expected '<k> <n> <d>' with k>=1, n>=1, d>=0");
            x.d = static_cast<int>(d);
            continue;
        }
        std::string s;
        fields >> s;
        if (static_cast<long>(s.size()) != n)
            throw Error("invariant-violation", "line " + std::to_string(lineno) +
                                                   ": string length != " + std::to_string(n));
        for (char ch : s)
            if (ch != '0' && ch != '1')
                throw Error("invariant-violation",
                            "line " + std::to_string(lineno) + ": non-binary character");
        x.strings.push_back(s);
    }
    if (count < 0) parse_fail(lineno, "missing '<k> <n> <d>' header");
    if (static_cast<long>(x.strings.size()) != count)
        parse_fail(lineno, "header announces " + std::to_string(count) + " strings, found " +
                               std::to_string(x.strings.size()));
    return x;
}

namespace {

template <class Loader>
auto load_file(const std::string& path, Loader&& loader) {
    std::ifstream in(path);
    if (!in) throw Error("parse-error", "cannot open " + path);
    return loader(in);
}

} // namespace

Graph load_graph(const std::string& path) {
    return load_file(path, [](std::istream& in) { return parse_graph(in); });
}

CnfFormula load_cnf(const std::string& path, int max_clause_width) {
    return load_file(path,
                     [&](std::istream& in) { return parse_cnf(in, max_clause_width); });
}

StringInstance load_strings(const std::string& path) {
    return load_file(path, [](std::istream& in) { return parse_strings(in); });
}

std::string format_ops_text(const OperationSet& ops) {
    std::string out = std::to_string(ops.size()) + " ";
    if (ops.empty()) return out + "{}";
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += ",";
        out += to_string(ops[i]);
    }
    return out;
}

std::string format_ints_text(const std::vector<int>& vals, const std::string& op_name) {
    std::string out = std::to_string(vals.size()) + " ";
    if (vals.empty()) return out + "{}";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) out += ",";
        out += op_name + "(" + std::to_string(vals[i]) + ")";
    }
    return out;
}

std::string format_ops_json(const OperationSet& ops) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GraphOp& op : ops) {
        nlohmann::json o;
        switch (op.kind) {
        case GraphOp::Kind::DeleteVertex:
            o["op"] = "delVertex";
            o["v"] = op.u;
            break;
        case GraphOp::Kind::DeleteEdge:
            o["op"] = "delEdge";
            o["u"] = op.u;
            o["v"] = op.v;
            break;
        case GraphOp::Kind::AddEdge:
            o["op"] = "addEdge";
            o["u"] = op.u;
            o["v"] = op.v;
            break;
        }
        arr.push_back(std::move(o));
    }
    nlohmann::json line;
    line["size"] = ops.size();
    line["ops"] = std::move(arr);
    return line.dump();
}

std::string format_ints_json(const std::vector<int>& vals, const std::string& op_name) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : vals) {
        nlohmann::json o;
        o["op"] = op_name;
        o["i"] = v;
        arr.push_back(std::move(o));
    }
    nlohmann::json line;
    line["size"] = vals.size();
    line["ops"] = std::move(arr);
    return line.dump();
}

} // namespace enumfpt
