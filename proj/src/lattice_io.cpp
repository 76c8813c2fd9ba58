#include "weylcoh/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weylcoh/errors.hpp"

namespace weylcoh {

namespace {

using nlohmann::json;

Integer entry(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer::from_string(std::to_string(v.get<std::uint64_t>()));
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw InvalidInput(where + ": empty integer string");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw InvalidInput(where + ": not an integer: \"" + s + "\"");
    return Integer::from_string(s[0] == '+' ? s.substr(1) : s);
  }
  throw InvalidInput(where + ": entries must be integers or integer strings");
}

IntMatrix matrix(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array() || v.size() != dim) throw InvalidInput(where + ": expected " + std::to_string(dim) + " rows");
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != dim)
      throw InvalidInput(where + ": row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = entry(row[j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

std::size_t size_field(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) throw InvalidInput(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

void line_column(const std::string& text, std::size_t byte, std::size_t& line, std::size_t& col) {
  line = 1;
  col = 1;
  byte = std::min(byte, text.size() + 1);
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

}  // namespace

std::string integer_json(const Integer& x) {
  static const Integer limit = Integer::from_string("9007199254740992");
  if (abs(x) < limit) return x.to_string();
  return "\"" + x.to_string() + "\"";
}

GLattice parse_lattice_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line, col;
    line_column(text, e.byte, line, col);
    throw InvalidInput("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!doc.is_object()) throw InvalidInput("lattice spec must be a JSON object");
  for (const char* k : {"group", "rank", "action_generators"})
    if (!doc.contains(k)) throw InvalidInput(std::string("lattice spec is missing \"") + k + "\"");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "group" && it.key() != "rank" && it.key() != "action_generators")
      throw InvalidInput("unknown field \"" + it.key() + "\"");

  const json& g = doc["group"];
  if (!g.is_object() || !g.contains("generators")) throw InvalidInput("\"group\" must be an object with \"generators\"");
  for (auto it = g.begin(); it != g.end(); ++it)
    if (it.key() != "generators" && it.key() != "dimension") throw InvalidInput("unknown group field \"" + it.key() + "\"");
  const json& gens = g["generators"];
  if (!gens.is_array() || gens.empty()) throw InvalidInput("\"group.generators\" must be a non-empty list");
  std::size_t dim = g.contains("dimension") ? size_field(g, "dimension") : gens[0].size();
  if (dim == 0) throw InvalidInput("group dimension must be positive");

  std::vector<IntMatrix> gm;
  for (std::size_t i = 0; i < gens.size(); ++i) gm.push_back(matrix(gens[i], dim, "group.generators[" + std::to_string(i) + "]"));

  const std::size_t rank = size_field(doc, "rank");
  const json& acts = doc["action_generators"];
  if (!acts.is_array() || acts.size() != gens.size())
    throw InvalidInput("\"action_generators\" must list one matrix per group generator (" + std::to_string(gens.size()) +
                       ")");
  std::vector<IntMatrix> am;
  for (std::size_t i = 0; i < acts.size(); ++i)
    am.push_back(matrix(acts[i], rank, "action_generators[" + std::to_string(i) + "]"));

  GroupPtr grp;
  try {
    grp = FiniteMatrixGroup::generate(gm, kLatticeSpecGroupCap);
  } catch (const ResourceGuardError& e) {
    throw InvalidInput(std::string("group closure failed: ") + e.what());
  }
  if (rank == 0) return GLattice::trivial(grp, 0);
  try {
    return GLattice::from_generators(grp, am);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("action is not a homomorphism: ") + e.what());
  }
}

GLattice load_lattice_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lattice_spec(ss.str());
}

}  // namespace weylcoh
