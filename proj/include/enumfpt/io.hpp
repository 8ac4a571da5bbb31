#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "enumfpt/closest_string.hpp"
#include "enumfpt/cnf.hpp"
#include "enumfpt/graph.hpp"

namespace enumfpt {

// DIMACS-style graph: "p edge <n> <m>" header, then m lines "e <u> <v>" with
// 1-based vertex ids. Lines starting with 'c' are comments. Errors are
// reported as Error("parse-error", ...) with the offending line number.
Graph parse_graph(std::istream& in);

// DIMACS CNF: "p cnf <vars> <clauses>" header, clauses as zero-terminated
// literal sequences, 'c' comments. max_clause_width < 0 disables the width
// check; backdoor problems pass 3.
CnfFormula parse_cnf(std::istream& in, int max_clause_width = -1);

// Closest-string input: first line "<k> <n> <d>", then k lines of n
// characters over {0,1}.
StringInstance parse_strings(std::istream& in);

Graph load_graph(const std::string& path);
CnfFormula load_cnf(const std::string& path, int max_clause_width = -1);
StringInstance load_strings(const std::string& path);

// Text rendering of one solution line: "<size> <op>,<op>,..." or "0 {}".
std::string format_ops_text(const OperationSet& ops);
std::string format_ints_text(const std::vector<int>& vals, const std::string& op_name);

// json-lines rendering: {"ops":[...],"size":N} with deterministic key order.
std::string format_ops_json(const OperationSet& ops);
std::string format_ints_json(const std::vector<int>& vals, const std::string& op_name);

} // namespace enumfpt
