#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cclone/clausal.hpp"
#include "cclone/witness.hpp"

namespace cclone {

// Text formats:
//   Relation:  header "n m", one member tuple per line, lexicographic output.
//   Operation: header "n k", the n^k table values on one line in code order.
//   ClausalSpec: "n p q | a_1 .. a_p | b_1 .. b_q".
// JSON envelopes:
//   {"n":..,"arity":..,"tuples":[[..],..]}   {"n":..,"arity":..,"table":[..]}
//   {"n":..,"p":..,"q":..,"a":[..],"b":[..]}

std::string relation_to_text(const Relation& rho);
Relation relation_from_text(std::string_view text);
std::string relation_to_json(const Relation& rho);
Relation relation_from_json(std::string_view text);

std::string operation_to_text(const Operation& f);
Operation operation_from_text(std::string_view text);
std::string operation_to_json(const Operation& f);
Operation operation_from_json(std::string_view text);

std::string clausal_spec_to_text(const ClausalSpec& spec);
ClausalSpec clausal_spec_from_text(std::string_view text);
std::string clausal_spec_to_json(const ClausalSpec& spec);
ClausalSpec clausal_spec_from_json(std::string_view text);

// {clausal, target, witness, violating_columns, image_tuple}
std::string certificate_to_json(const WitnessCertificate& cert);

// Single-line display forms: {0,2} / {(0,0),(1,2)} and [t0 t1 .. ] tables.
std::string relation_compact(const Relation& rho);
std::string operation_compact(const Operation& f);

// Files are sniffed: leading '{' means the JSON envelope, anything else the
// text format. "-" reads stdin.
Relation load_relation(const std::string& path);
Operation load_operation(const std::string& path);

// One spec per line (text form); blank lines and '#' comments are skipped.
// All specs must share one domain size.
std::vector<ClausalSpec> load_clausal_specs(const std::string& path);

}  // namespace cclone
