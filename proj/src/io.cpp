#include "repkit/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "repkit/errors.hpp"

namespace repkit::io {

json imat_to_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat imat_from_json(const json& j) {
  if (!j.is_array()) throw BadParameters("matrix JSON must be an array of rows");
  std::vector<std::vector<Int>> rows;
  for (const json& jr : j) {
    std::vector<Int> row;
    for (const json& je : jr) {
      if (je.is_number_integer())
        row.emplace_back(static_cast<long>(je.get<long long>()));
      else if (je.is_string())
        row.emplace_back(je.get<std::string>());
      else
        throw BadParameters("matrix entries must be integers or decimal strings");
    }
    rows.push_back(std::move(row));
  }
  return IntMat::from_rows(rows);
}

json lattice_to_json(const Lattice& l) {
  return json{{"ambient_rank", l.ambient_rank()}, {"basis", imat_to_json(l.basis())}};
}

Lattice lattice_from_json(const json& j) {
  int ambient = j.at("ambient_rank").get<int>();
  IntMat basis = imat_from_json(j.at("basis"));
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < basis.rows(); ++i) rows.push_back(basis.row(i));
  return Lattice::from_generators(ambient, rows);
}

json rat_to_json(const Rat& r) { return r.get_str(); }

std::string weights_to_text(const weights::WeightMultiset& w) {
  std::ostringstream os;
  for (const auto& [v, m] : w.entries()) {
    os << m;
    for (long long c : v) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

weights::WeightMultiset weights_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<weights::WVec, long long>> parsed;
  int rank = -1;
  while (std::getline(is, line)) {
    // Accept literal "\n" separators from shell-provided one-liners.
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x;
    while (ls >> x) nums.push_back(x);
    if (nums.empty()) continue;
    if (nums.size() < 2) throw BadParameters("weight line needs a multiplicity and coordinates");
    long long mult = nums[0];
    if (mult < 1) throw BadParameters("multiplicity must be positive");
    weights::WVec v(nums.begin() + 1, nums.end());
    if (rank < 0) rank = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != rank) throw BadParameters("inconsistent weight lengths");
    parsed.emplace_back(std::move(v), mult);
  }
  if (rank < 0) throw BadParameters("no weights given");
  weights::WeightMultiset w(rank);
  for (auto& [v, m] : parsed) w.add(v, m);
  return w;
}

json weights_to_json(const weights::WeightMultiset& w) {
  json entries = json::array();
  for (const auto& [v, m] : w.entries())
    entries.push_back(json{{"coords", v}, {"mult", m}});
  return json{{"rank", w.rank()}, {"weights", entries}};
}

weights::WeightMultiset weights_from_json(const json& j) {
  weights::WeightMultiset w(j.at("rank").get<int>());
  for (const json& e : j.at("weights"))
    w.add(e.at("coords").get<weights::WVec>(), e.at("mult").get<long long>());
  return w;
}

namespace {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw BadParameters("empty rational literal");
  Rat r;
  try {
    r = Rat(s);
  } catch (const std::invalid_argument&) {
    throw BadParameters("bad rational literal '" + s + "'");
  }
  r.canonicalize();
  return r;
}

}  // namespace

Cyclotomic parse_cyclotomic(const std::string& literal, long conductor) {
  std::string s;
  for (char ch : literal)
    if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw BadParameters("empty cyclotomic literal");
  std::vector<Rat> coeffs(conductor, Rat(0));
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    if (term.empty()) throw BadParameters("dangling sign in cyclotomic literal");
    Rat coef(1);
    long power = 0;
    size_t zpos = term.find('z');
    if (zpos == std::string::npos) {
      coef = parse_rational(term);
    } else {
      std::string pre = term.substr(0, zpos);
      if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (!pre.empty()) coef = parse_rational(pre);
      }
      std::string post = term.substr(zpos + 1);
      if (post.empty()) {
        power = 1;
      } else if (post[0] == '^') {
        try {
          size_t used = 0;
          power = std::stol(post.substr(1), &used);
          if (used != post.size() - 1) throw std::invalid_argument("trailing garbage");
        } catch (const std::exception&) {
          throw BadParameters("bad power in cyclotomic literal '" + term + "'");
        }
      } else {
        throw BadParameters("bad power in cyclotomic literal '" + term + "'");
      }
    }
    power %= conductor;
    if (power < 0) power += conductor;
    coeffs[power] += Rat(sign) * coef;
  }
  return Cyclotomic::from_coeffs(conductor, std::move(coeffs));
}

json cyclotomic_to_json(const Cyclotomic& z) {
  return json{{"conductor", z.conductor()}, {"value", z.str()}};
}

json classfunction_to_json(const ClassFunction& f) {
  json values = json::array();
  const GroupPtr& g = f.group();
  for (int c = 0; c < g->num_classes(); ++c)
    values.push_back(json{{"class_rep", g->element_label(g->class_rep(c))},
                          {"class_size", g->classes()[c].size()},
                          {"value", cyclotomic_to_json(f.at_class(c))}});
  return values;
}

json cycmat_to_json(const CycMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupPtr parse_group_spec(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    json j = json::parse(spec);
    return FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>(),
                                   j.value("name", "table"));
  }
  auto colon = spec.find(':');
  std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
  int arg = colon == std::string::npos ? -1 : std::stoi(spec.substr(colon + 1));
  if (kind == "heisenberg") return FiniteGroup::heisenberg(arg);
  if (kind == "sym") return FiniteGroup::symmetric(arg);
  if (kind == "cyclic") return FiniteGroup::cyclic(arg);
  if (kind == "dihedral") return FiniteGroup::dihedral(arg);
  if (kind == "quaternion") {
    if (arg != 8 && arg != -1) throw BadParameters("only quaternion:8 is available");
    return FiniteGroup::quaternion8();
  }
  throw BadParameters("unknown group spec '" + spec + "'");
}

Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec) {
  if (spec == "full") return Subgroup::whole(g);
  if (spec == "trivial") return Subgroup::from_elements(g, {g->identity()});
  if (spec == "center") return Subgroup::from_elements(g, g->center_elements());
  if (spec == "derived") return Subgroup::from_elements(g, g->derived_elements());
  if (spec == "alt") {
    const auto& perms = g->perms();
    if (perms.empty()) throw BadParameters("'alt' needs a symmetric preset group");
    std::vector<int> evens;
    for (int x = 0; x < g->order(); ++x) {
      const auto& p = perms[x];
      int inversions = 0;
      for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2 == 0) evens.push_back(x);
    }
    return Subgroup::from_elements(g, evens);
  }
  std::vector<int> gens;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    gens.push_back(std::stoi(tok));
  }
  if (gens.empty()) throw BadParameters("empty subgroup spec");
  return Subgroup::from_generators(g, gens);
}

namespace {

bool is_heisenberg(const GroupPtr& g) { return g->name().rfind("heisenberg:", 0) == 0; }

MatrixRep resolve_rep_term(const GroupPtr& g, const std::string& term) {
  if (term == "triv" || term == "trivial") return MatrixRep::trivial(g);
  if (term == "reg") return MatrixRep::regular(g);
  if (term == "std") return symmetric_standard_rep(g);
  if (term == "perm") return symmetric_permutation_rep(g);
  if (term == "sign") return MatrixRep::from_linear(symmetric_sign_character(g));
  if (term == "plane") {
    if (g->name().rfind("dihedral:", 0) == 0) return dihedral_plane_rep(g);
    if (g->name() == "quaternion:8") return quaternion_plane_rep(g);
    throw BadParameters("'plane' needs a dihedral or quaternion preset");
  }
  auto colon = term.find(':');
  if (colon != std::string::npos) {
    std::string kind = term.substr(0, colon);
    int arg = std::stoi(term.substr(colon + 1));
    if (kind == "rho") {
      if (!is_heisenberg(g)) throw BadParameters("'rho:a' needs a heisenberg preset");
      return heisenberg_rep(g, arg);
    }
    if (kind == "lin") {
      auto chars = linear_characters(g);
      if (arg < 0 || arg >= static_cast<int>(chars.size()))
        throw BadParameters("linear character index out of range");
      return MatrixRep::from_linear(chars[arg]);
    }
    if (kind == "irr")
      throw BadParameters("'irr:i' terms are character-only; use a character slot");
  }
  throw BadParameters("unknown representation term '" + term + "'");
}

std::vector<std::string> split_terms(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : spec) {
    if (ch == '+') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw BadParameters("empty representation spec");
  return out;
}

}  // namespace

ClassFunction parse_character_spec(const GroupPtr& g, const std::string& spec) {
  std::vector<std::string> terms = split_terms(spec);
  std::optional<ClassFunction> acc;
  for (const std::string& term : terms) {
    std::optional<ClassFunction> chi;
    if (term == "sign") {
      chi = symmetric_sign_character(g);
    } else if (term.rfind("irr:", 0) == 0) {
      auto table = character_table(g);
      int idx = std::stoi(term.substr(4));
      if (idx < 0 || idx >= static_cast<int>(table.size()))
        throw BadParameters("irreducible index out of range");
      chi = table[idx];
    } else if (term.rfind("lin:", 0) == 0) {
      auto chars = linear_characters(g);
      int idx = std::stoi(term.substr(4));
      if (idx < 0 || idx >= static_cast<int>(chars.size()))
        throw BadParameters("linear character index out of range");
      chi = chars[idx];
    } else {
      chi = character(resolve_rep_term(g, term));
    }
    acc = acc ? *acc + *chi : *chi;
  }
  return *acc;
}

MatrixRep parse_rep_spec(const GroupPtr& g, const std::string& spec) {
  std::vector<std::string> terms = split_terms(spec);
  std::optional<MatrixRep> acc;
  for (const std::string& term : terms) {
    MatrixRep r = resolve_rep_term(g, term);
    acc = acc ? MatrixRep::direct_sum(*acc, r) : r;
  }
  return *acc;
}

MatrixRep rep_from_json(const GroupPtr& g, const json& j) {
  long conductor = j.at("conductor").get<long>();
  std::vector<int> gens = j.at("generators").get<std::vector<int>>();
  std::vector<CycMat> images;
  for (const json& jm : j.at("images")) {
    int d = static_cast<int>(jm.size());
    CycMat m(d);
    for (int r = 0; r < d; ++r) {
      if (static_cast<int>(jm[r].size()) != d) throw BadParameters("image matrix is ragged");
      for (int c = 0; c < d; ++c)
        m.at(r, c) = parse_cyclotomic(jm[r][c].get<std::string>(), conductor);
    }
    images.push_back(std::move(m));
  }
  return MatrixRep::from_generator_images(g, gens, images);
}

json highest_weight_to_json(const liealg::HighestWeight& hw) { return json(hw.coeffs); }

liealg::HighestWeight highest_weight_from_string(const std::string& s) {
  liealg::HighestWeight hw;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    hw.coeffs.push_back(std::stoll(tok));
  }
  if (hw.coeffs.empty()) throw BadParameters("empty highest weight");
  return hw;
}

}  // namespace repkit::io
