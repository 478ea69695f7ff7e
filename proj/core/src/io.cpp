#include "cclone/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cclone {

namespace {

using nlohmann::json;

std::vector<int> ints_from(std::istringstream& in, const char* what) {
  std::vector<int> out;
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument(std::string("malformed ") + what);
  return out;
}

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument(std::string("malformed JSON ") + what);
  return j;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

}  // namespace

std::string relation_to_text(const Relation& rho) {
  std::ostringstream out;
  out << rho.domain().value() << ' ' << rho.arity() << '\n';
  for (const Tuple& t : rho.members()) {
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
    out << '\n';
  }
  return out.str();
}

Relation relation_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("relation text: missing header");
  std::istringstream head(header);
  int n = 0, m = 0;
  if (!(head >> n >> m)) throw std::invalid_argument("relation text: header must be \"n m\"");
  Relation rho(DomainSize(n), m);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<int> t = ints_from(row, "relation tuple");
    if (t.empty()) continue;
    if (static_cast<int>(t.size()) != m)
      throw std::invalid_argument("relation text: tuple has wrong arity");
    rho.insert(t);
  }
  return rho;
}

std::string relation_to_json(const Relation& rho) {
  json j;
  j["n"] = rho.domain().value();
  j["arity"] = rho.arity();
  j["tuples"] = json::array();
  for (const Tuple& t : rho.members()) j["tuples"].push_back(t);
  return j.dump();
}

Relation relation_from_json(std::string_view text) {
  const json j = parse_json(text, "relation");
  Relation rho(DomainSize(j.at("n").get<int>()), j.at("arity").get<int>());
  for (const auto& t : j.at("tuples")) {
    const std::vector<int> tuple = t.get<std::vector<int>>();
    if (static_cast<int>(tuple.size()) != rho.arity())
      throw std::invalid_argument("relation JSON: tuple has wrong arity");
    rho.insert(tuple);
  }
  return rho;
}

std::string operation_to_text(const Operation& f) {
  std::ostringstream out;
  out << f.domain().value() << ' ' << f.arity() << '\n';
  const auto& table = f.table();
  for (std::size_t i = 0; i < table.size(); ++i) out << (i ? " " : "") << table[i];
  out << '\n';
  return out.str();
}

Operation operation_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0, k = 0;
  if (!(in >> n >> k)) throw std::invalid_argument("operation text: header must be \"n k\"");
  std::vector<int> table;
  int v;
  while (in >> v) table.push_back(v);
  return Operation(DomainSize(n), k, std::move(table));
}

std::string operation_to_json(const Operation& f) {
  json j;
  j["n"] = f.domain().value();
  j["arity"] = f.arity();
  j["table"] = f.table();
  return j.dump();
}

Operation operation_from_json(std::string_view text) {
  const json j = parse_json(text, "operation");
  return Operation(DomainSize(j.at("n").get<int>()), j.at("arity").get<int>(),
                   j.at("table").get<std::vector<int>>());
}

std::string clausal_spec_to_text(const ClausalSpec& spec) {
  std::ostringstream out;
  out << spec.n.value() << ' ' << spec.p() << ' ' << spec.q() << " |";
  for (int x : spec.a) out << ' ' << x;
  out << " |";
  for (int y : spec.b) out << ' ' << y;
  return out.str();
}

ClausalSpec clausal_spec_from_text(std::string_view text) {
  const std::string s(text);
  const std::size_t bar1 = s.find('|');
  const std::size_t bar2 = bar1 == std::string::npos ? std::string::npos : s.find('|', bar1 + 1);
  if (bar2 == std::string::npos)
    throw std::invalid_argument("clausal spec text: expected \"n p q | a.. | b..\"");
  std::istringstream head(s.substr(0, bar1));
  int n = 0, p = 0, q = 0;
  if (!(head >> n >> p >> q))
    throw std::invalid_argument("clausal spec text: header must be \"n p q\"");
  std::istringstream mid(s.substr(bar1 + 1, bar2 - bar1 - 1));
  std::istringstream tail(s.substr(bar2 + 1));
  std::vector<int> a = ints_from(mid, "clausal spec a-block");
  std::vector<int> b = ints_from(tail, "clausal spec b-block");
  if (static_cast<int>(a.size()) != p || static_cast<int>(b.size()) != q)
    throw std::invalid_argument("clausal spec text: p/q do not match the blocks");
  return ClausalSpec(DomainSize(n), std::move(a), std::move(b));
}

std::string clausal_spec_to_json(const ClausalSpec& spec) {
  json j;
  j["n"] = spec.n.value();
  j["p"] = spec.p();
  j["q"] = spec.q();
  j["a"] = spec.a;
  j["b"] = spec.b;
  return j.dump();
}

ClausalSpec clausal_spec_from_json(std::string_view text) {
  const json j = parse_json(text, "clausal spec");
  ClausalSpec spec(DomainSize(j.at("n").get<int>()), j.at("a").get<std::vector<int>>(),
                   j.at("b").get<std::vector<int>>());
  if (j.contains("p") && j.at("p").get<int>() != spec.p())
    throw std::invalid_argument("clausal spec JSON: p does not match a");
  if (j.contains("q") && j.at("q").get<int>() != spec.q())
    throw std::invalid_argument("clausal spec JSON: q does not match b");
  return spec;
}

std::string certificate_to_json(const WitnessCertificate& cert) {
  json j;
  j["clausal"] = json::parse(relation_to_json(cert.clausal));
  j["target"] = json::parse(relation_to_json(cert.target));
  j["witness"] = json::parse(operation_to_json(cert.witness));
  j["violating_columns"] = cert.violation.columns;
  j["image_tuple"] = cert.violation.image;
  return j.dump();
}

std::string relation_compact(const Relation& rho) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Tuple& t : rho.members()) {
    if (!first) out << ',';
    first = false;
    if (rho.arity() == 1) {
      out << t[0];
    } else {
      out << '(';
      for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
      out << ')';
    }
  }
  out << '}';
  return out.str();
}

std::string operation_compact(const Operation& f) {
  std::ostringstream out;
  out << "k=" << f.arity() << " [";
  const auto& table = f.table();
  for (std::size_t i = 0; i < table.size(); ++i) out << (i ? " " : "") << table[i];
  out << ']';
  return out.str();
}

Relation load_relation(const std::string& path) {
  const std::string text = slurp(path);
  return looks_like_json(text) ? relation_from_json(text) : relation_from_text(text);
}

Operation load_operation(const std::string& path) {
  const std::string text = slurp(path);
  return looks_like_json(text) ? operation_from_json(text) : operation_from_text(text);
}

std::vector<ClausalSpec> load_clausal_specs(const std::string& path) {
  const std::string text = slurp(path);
  std::istringstream in(text);
  std::vector<ClausalSpec> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(looks_like_json(line) ? clausal_spec_from_json(line)
                                        : clausal_spec_from_text(line));
  }
  for (const ClausalSpec& spec : out)
    if (!(spec.n == out.front().n))
      throw std::invalid_argument("clausal spec file mixes domain sizes");
  return out;
}

}  // namespace cclone
