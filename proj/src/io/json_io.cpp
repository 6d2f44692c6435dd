#include "rook/io/json_io.hpp"

#include <fstream>
#include <sstream>

namespace rook {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::string text(const Json& j, const char* name) {
  const Json& f = field(j, name);
  if (!f.is_string()) throw FormatError(std::string("field \"") + name + "\" must be a string");
  return f.get<std::string>();
}

Vars vars_of(const Json& j) {
  std::vector<std::string> names;
  for (const auto& v : field(j, "vars")) names.push_back(v.get<std::string>());
  return Vars(names);
}

}  // namespace

Json to_json(const SeqTable& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(t.get_str());
  return Json{{"name", s.name}, {"terms", terms}, {"provenance", s.provenance}};
}

SeqTable seqtable_from_json(const Json& j) {
  SeqTable s;
  s.name = text(j, "name");
  s.provenance = text(j, "provenance");
  for (const auto& t : field(j, "terms")) {
    Integer v;
    if (!t.is_string() || v.set_str(t.get<std::string>(), 10) != 0) throw FormatError("terms must be decimal strings");
    s.terms.push_back(v);
  }
  return s;
}

Json to_json(const DiffOp& op) {
  Json names = Json::array();
  for (std::size_t i = 0; i < op.vars().size(); ++i) names.push_back(op.vars().name(i));
  Json terms = Json::array();
  for (const auto& [k, c] : op.terms()) {
    Json e = Json::array();
    for (std::size_t i = 0; i < op.vars().size(); ++i) e.push_back(mono::exponent(k, i));
    terms.push_back(Json{{"exp", e}, {"coeff", c.to_string()}});
  }
  return Json{{"kind", "diff"}, {"vars", names}, {"terms", terms}};
}

Json to_json(const RecOp& op) {
  Json terms = Json::array();
  for (const auto& [j, q] : op.terms()) terms.push_back(Json{{"exp", Json::array({j})}, {"coeff", q.to_string()}});
  return Json{{"kind", "shift"}, {"vars", Json::array({"n"})}, {"terms", terms}};
}

DiffOp diffop_from_json(const Json& j) {
  if (text(j, "kind") != "diff") throw FormatError("expected a differential operator");
  Vars v = vars_of(j);
  DiffOp op(v);
  for (const auto& t : field(j, "terms")) {
    mono::Exponents e{0, 0, 0, 0};
    const Json& ex = field(t, "exp");
    if (ex.size() != v.size()) throw FormatError("exponent length differs from the variable list");
    for (std::size_t i = 0; i < ex.size(); ++i) e[i] = ex[i].get<unsigned>();
    op.add_term(mono::make(e), parse_ratfun(text(t, "coeff"), v));
  }
  return op;
}

RecOp recop_from_json(const Json& j) {
  if (text(j, "kind") != "shift") throw FormatError("expected a shift operator");
  RecOp op;
  for (const auto& t : field(j, "terms")) {
    const Json& ex = field(t, "exp");
    if (ex.size() != 1) throw FormatError("shift exponents have one entry");
    op.add_term(ex[0].get<int>(), parse_mpoly(text(t, "coeff"), RecOp::ring()));
  }
  return op;
}

Json to_json(const Certificate& c) {
  Json names = Json::array();
  for (std::size_t i = 0; i < c.S.vars().size(); ++i) names.push_back(c.S.vars().name(i));
  return Json{{"P", to_json(c.P)},       {"vars", names},
              {"S", c.S.to_string()},    {"T", c.T.to_string()},
              {"verified", c.verified},  {"stage_log", c.stage_log}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.P = diffop_from_json(field(j, "P"));
  Vars v = vars_of(j);
  c.S = parse_ratfun(text(j, "S"), v);
  c.T = parse_ratfun(text(j, "T"), v);
  const Json& ver = field(j, "verified");
  if (!ver.is_boolean()) throw FormatError("\"verified\" must be a boolean");
  c.verified = ver.get<bool>();
  for (const auto& s : field(j, "stage_log")) c.stage_log.push_back(s.get<std::string>());
  return c;
}

Json to_json(const CheckReport& r) {
  Json j{{"check", r.check}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}};
  if (r.order >= 0) j["order"] = r.order;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& t) {
  try {
    return Json::parse(t);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& p, const std::string& t) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << t;
}

}  // namespace rook
