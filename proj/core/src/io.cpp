#include "uniaff/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace uniaff {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require_key(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, "missing key \"" + key + "\"");
  return *it;
}

int require_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<int>();
}

Rational require_rational(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "expected a rational string \"p/q\"");
  try {
    return rat_from_string(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(where, e.what());
  }
}

Vec require_rational_array(const json& v, int expected_len, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of rational strings");
  if (expected_len >= 0 && static_cast<int>(v.size()) != expected_len)
    bad(where, "expected " + std::to_string(expected_len) + " entries, got " +
                   std::to_string(v.size()));
  Vec out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(require_rational(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> require_index_list(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of basis indices");
  std::vector<bool> seen(static_cast<std::size_t>(dim), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int k = require_int(v[i], where + "[" + std::to_string(i) + "]");
    if (k < 0 || k >= dim)
      bad(where + "[" + std::to_string(i) + "]", "index " + std::to_string(k) + " out of range");
    if (seen[static_cast<std::size_t>(k)])
      bad(where + "[" + std::to_string(i) + "]", "duplicate index " + std::to_string(k));
    seen[static_cast<std::size_t>(k)] = true;
    out.push_back(k);
  }
  return out;
}

Subspace coordinate_span(int dim, const std::vector<int>& indices) {
  std::vector<Vec> rows;
  for (int k : indices) {
    Vec v = vec_zero(dim);
    v[static_cast<std::size_t>(k)] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace::span(dim, rows);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // count the line the parser stopped on
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

json element_array(const Element& x) {
  json arr = json::array();
  for (const auto& c : x.coords) arr.push_back(rat_to_string(c));
  return arr;
}

json vec_array(const Vec& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(rat_to_string(c));
  return arr;
}

json matrix_array(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_array(m.row(i)));
  return rows;
}

Element element_from(const json& v, const std::string& where) {
  return Element{require_rational_array(v, -1, where)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem_of(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

}  // namespace

ProblemInstance parse_problem_text(const std::string& text, const std::string& name) {
  json doc = parse_json(text);
  if (!doc.is_object()) bad("document", "expected a JSON object");
  static const char* known[] = {"dim", "basis", "brackets", "levi", "nilradical", "element"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) bad("document", "unknown key \"" + it.key() + "\"");
  }

  int dim = require_int(require_key(doc, "dim", "document"), "dim");
  if (dim < 1) bad("dim", "dimension must be positive");

  const json& basis = require_key(doc, "basis", "document");
  if (!basis.is_array() || static_cast<int>(basis.size()) != dim)
    bad("basis", "expected an array of " + std::to_string(dim) + " names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) bad("basis[" + std::to_string(i) + "]", "expected a string");
    names.push_back(basis[i].get<std::string>());
  }

  const json& brackets = require_key(doc, "brackets", "document");
  if (!brackets.is_object()) bad("brackets", "expected an object keyed by \"i,j\"");
  std::map<std::pair<int, int>, SparseVec> table;
  for (auto it = brackets.begin(); it != brackets.end(); ++it) {
    const std::string& key = it.key();
    const std::string where = "brackets[\"" + key + "\"]";
    std::size_t comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
      bad(where, "key must have the form \"i,j\"");
    int i = 0, j = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(key.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument(key);
      j = std::stoi(key.substr(comma + 1), &used);
      if (used != key.size() - comma - 1) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad(where, "key must have the form \"i,j\" with integer indices");
    }
    if (i < 0 || j < 0 || i >= dim || j >= dim) bad(where, "basis index out of range");
    if (i >= j) bad(where, "only pairs i < j may appear");
    if (!it.value().is_array()) bad(where, "expected an array of [k, \"p/q\"] terms");
    SparseVec terms;
    std::vector<bool> seen(static_cast<std::size_t>(dim), false);
    for (std::size_t t = 0; t < it.value().size(); ++t) {
      const json& term = it.value()[t];
      const std::string term_where = where + "[" + std::to_string(t) + "]";
      if (!term.is_array() || term.size() != 2) bad(term_where, "expected [k, \"p/q\"]");
      int k = require_int(term[0], term_where);
      if (k < 0 || k >= dim) bad(term_where, "basis index out of range");
      if (seen[static_cast<std::size_t>(k)]) bad(term_where, "duplicate basis index");
      seen[static_cast<std::size_t>(k)] = true;
      Rational c = require_rational(term[1], term_where);
      if (!is_zero(c)) terms.emplace_back(k, std::move(c));
    }
    if (!terms.empty()) table[{i, j}] = std::move(terms);
  }

  std::vector<int> levi_idx = require_index_list(require_key(doc, "levi", "document"), dim, "levi");
  std::vector<int> nil_idx =
      require_index_list(require_key(doc, "nilradical", "document"), dim, "nilradical");
  Vec element = require_rational_array(require_key(doc, "element", "document"), dim, "element");

  LieAlgebra algebra(dim, std::move(names), std::move(table));
  LeviData ld{coordinate_span(dim, levi_idx), coordinate_span(dim, nil_idx)};
  return ProblemInstance{name, std::move(algebra), std::move(ld), Element{std::move(element)}};
}

ProblemInstance parse_problem_file(const std::string& path) {
  return parse_problem_text(read_file(path), stem_of(path));
}

std::string certificate_to_json(const Certificate& cert) {
  json doc;
  if (const auto* emb = std::get_if<EmbeddingCert>(&cert)) {
    doc["kind"] = "EMBEDDING";
    json ys = json::array();
    for (const Element& y : emb->conjugators) ys.push_back(element_array(y));
    doc["conjugators"] = std::move(ys);
    doc["final"] = element_array(emb->final_element);
  } else {
    const auto& sec = std::get<SectionCert>(cert);
    doc["kind"] = "SECTION";
    doc["level"] = sec.level;
    json ys = json::array();
    for (const Element& y : sec.conjugators) ys.push_back(element_array(y));
    doc["conjugators"] = std::move(ys);
    doc["phi"] = vec_array(sec.phi);
  }
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) bad("certificate", "expected a JSON object");
  const json& kind_val = require_key(doc, "kind", "certificate");
  if (!kind_val.is_string()) bad("kind", "expected a string");
  std::string kind = kind_val.get<std::string>();
  const json& conj = require_key(doc, "conjugators", "certificate");
  if (!conj.is_array()) bad("conjugators", "expected an array of coordinate vectors");
  std::vector<Element> ys;
  for (std::size_t i = 0; i < conj.size(); ++i)
    ys.push_back(element_from(conj[i], "conjugators[" + std::to_string(i) + "]"));
  if (kind == "EMBEDDING") {
    EmbeddingCert cert;
    cert.conjugators = std::move(ys);
    cert.final_element = element_from(require_key(doc, "final", "certificate"), "final");
    return cert;
  }
  if (kind == "SECTION") {
    SectionCert cert;
    cert.level = require_int(require_key(doc, "level", "certificate"), "level");
    cert.conjugators = std::move(ys);
    cert.phi = require_rational_array(require_key(doc, "phi", "certificate"), -1, "phi");
    return cert;
  }
  bad("kind", "expected \"EMBEDDING\" or \"SECTION\"");
}

Certificate certificate_from_file(const std::string& path) {
  return certificate_from_json(read_file(path));
}

std::string trace_to_json(const Verdict& verdict) {
  json doc;
  doc["verdict"] = verdict_name(verdict.kind);
  json levels = json::array();
  for (const LevelRecord& rec : verdict.trace) {
    json level;
    level["level"] = rec.level;
    level["action"] = matrix_array(rec.action);
    level["image"] = matrix_array(rec.action_image.basis());
    level["vbar"] = vec_array(rec.vbar);
    if (rec.branch == Branch::conjugate) {
      level["branch"] = "CONJUGATE";
      level["y"] = element_array(rec.y);
    } else {
      level["branch"] = "SECTION";
      level["phi"] = vec_array(rec.phi);
    }
    levels.push_back(std::move(level));
  }
  doc["levels"] = std::move(levels);
  return doc.dump(2) + "\n";
}

std::string format_element(const LieAlgebra& g, const Element& x) {
  std::string out;
  for (int i = 0; i < g.dim(); ++i) {
    const Rational& c = x.coords[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    const std::string& name = g.basis_names()[static_cast<std::size_t>(i)];
    std::string sign = sgn(c) < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
    Rational mag = abs(c);
    out += sign + (mag == 1 ? name : rat_to_string(mag) + " " + name);
  }
  return out.empty() ? "0" : out;
}

std::string explain_text(const LieAlgebra& g, const Verdict& verdict) {
  std::ostringstream out;
  for (const LevelRecord& rec : verdict.trace) {
    out << "level " << rec.level << ": dim V_" << rec.level << " = " << rec.vbar.size()
        << ", rank A_" << rec.level << " = " << rec.action_image.dim();
    if (rec.branch == Branch::conjugate) {
      out << ", branch = CONJUGATE, y = " << format_element(g, rec.y) << "\n";
    } else {
      out << ", branch = SECTION, phi = [";
      for (std::size_t i = 0; i < rec.phi.size(); ++i)
        out << (i ? ", " : "") << rat_to_string(rec.phi[i]);
      out << "]\n";
    }
  }
  if (verdict.kind == VerdictKind::not_affine) {
    const auto& cert = std::get<EmbeddingCert>(verdict.certificate);
    out << "base case: nilradical exhausted; " << format_element(g, cert.final_element)
        << " lies in the reductive part\n";
    out << "verdict: NOT_AFFINE\n";
  } else {
    const auto& cert = std::get<SectionCert>(verdict.certificate);
    out << "section found at level " << cert.level << "\n";
    out << "verdict: AFFINE\n";
  }
  return out.str();
}

}  // namespace uniaff
