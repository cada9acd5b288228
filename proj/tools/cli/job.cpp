#include "job.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

#include "hochschild/fixtures.hpp"

namespace hochschild::cli {
namespace {

using nlohmann::json;

std::string pointer_child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string pointer_child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const json& require(const json& node, const std::string& key, const std::string& at) {
  if (!node.is_object()) throw ConfigError(at, "expected an object");
  auto it = node.find(key);
  if (it == node.end()) throw ConfigError(pointer_child(at, key), "missing");
  return *it;
}

Scalar scalar_at(const json& node, FieldSpec field, const std::string& at) {
  if (!node.is_string()) throw ConfigError(at, "expected a scalar string");
  try {
    return Scalar::parse(field, node.get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(at, e.what());
  }
}

std::size_t index_at(const json& node, const std::string& at) {
  if (!node.is_number_unsigned()) throw ConfigError(at, "expected a non-negative integer");
  return node.get<std::size_t>();
}

const json& array_at(const json& node, std::size_t size, const std::string& at) {
  if (!node.is_array()) throw ConfigError(at, "expected an array");
  if (size != SIZE_MAX && node.size() != size) {
    throw ConfigError(at, "expected " + std::to_string(size) + " entries, found " + std::to_string(node.size()));
  }
  return node;
}

// Nested arrays of scalar strings flattened row-major, with every extent checked.
std::vector<Scalar> tensor_at(const json& node, FieldSpec field, const std::vector<std::size_t>& shape,
                              const std::string& at) {
  std::vector<Scalar> out;
  auto walk = [&](auto&& self, const json& n, std::size_t depth, const std::string& where) -> void {
    if (depth == shape.size()) {
      out.push_back(scalar_at(n, field, where));
      return;
    }
    array_at(n, shape[depth], where);
    for (std::size_t i = 0; i < n.size(); ++i) self(self, n[i], depth + 1, pointer_child(where, i));
  };
  walk(walk, node, 0, at);
  return out;
}

std::vector<std::string> labels_at(const json& node, const std::string& at) {
  array_at(node, SIZE_MAX, at);
  if (node.empty()) throw ConfigError(at, "an algebra or module needs at least one basis vector");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string()) throw ConfigError(pointer_child(at, i), "expected a label string");
    labels.push_back(node[i].get<std::string>());
  }
  return labels;
}

struct ResolvedAlgebra {
  Algebra algebra;
  std::optional<std::string> builtin;
  json echo;
};

ResolvedAlgebra algebra_at(const json& node, FieldSpec field, const std::string& at) {
  if (node.is_string()) {
    auto name = node.get<std::string>();
    try {
      return {builtin_algebra(field, name), name, name};
    } catch (const UsageError& e) {
      throw ConfigError(at, e.what());
    }
  }
  auto labels = labels_at(require(node, "labels", at), pointer_child(at, "labels"));
  const std::size_t d = labels.size();
  auto constants = tensor_at(require(node, "constants", at), field, {d, d, d}, pointer_child(at, "constants"));
  auto unit = tensor_at(require(node, "unit", at), field, {d}, pointer_child(at, "unit"));
  Algebra algebra(field, labels, std::move(constants), std::move(unit));
  return {algebra, std::nullopt, node};
}

AlgebraMorphism epsilon_at(const json* node, const ResolvedAlgebra& b, const ResolvedAlgebra& a,
                           const std::string& at, json& echo) {
  if (node == nullptr || (node->is_string() && node->get<std::string>() == "canonical")) {
    echo = "canonical";
    if (b.builtin && (*b.builtin == "ground_field" || *b.builtin == "dual_numbers")) {
      return canonical_epsilon(b.algebra, *b.builtin, a.algebra);
    }
    if (b.algebra.dim() == 1) return AlgebraMorphism::unit_map(b.algebra, a.algebra);
    throw ConfigError(at, "no canonical epsilon for this B; give a matrix");
  }
  auto matrix = tensor_at(require(*node, "matrix", at), a.algebra.field(), {a.algebra.dim(), b.algebra.dim()},
                          pointer_child(at, "matrix"));
  echo = *node;
  return AlgebraMorphism(b.algebra, a.algebra, std::move(matrix));
}

SymmetricBimodule module_at(const json* node, const Algebra& a, const std::string& at, json& echo) {
  if (node == nullptr || (node->is_string() && node->get<std::string>() == "regular")) {
    echo = "regular";
    return SymmetricBimodule::regular(a);
  }
  auto labels = labels_at(require(*node, "labels", at), pointer_child(at, "labels"));
  auto action = tensor_at(require(*node, "action", at), a.field(), {a.dim(), labels.size(), labels.size()},
                          pointer_child(at, "action"));
  echo = *node;
  return SymmetricBimodule(a, labels, std::move(action));
}

SimplicialPair explicit_pair_at(const json& node, const std::string& at) {
  const std::string levels_at = pointer_child(at, "levels");
  const json& levels_node = array_at(require(node, "levels", at), SIZE_MAX, levels_at);
  if (levels_node.empty()) throw ConfigError(levels_at, "need at least degree 0");
  std::vector<LevelSize> levels;
  for (std::size_t q = 0; q < levels_node.size(); ++q) {
    const std::string here = pointer_child(levels_at, q);
    array_at(levels_node[q], 2, here);
    levels.push_back({index_at(levels_node[q][0], pointer_child(here, 0)), index_at(levels_node[q][1], pointer_child(here, 1))});
  }
  const std::string faces_at = pointer_child(at, "faces");
  const json& faces_node = array_at(require(node, "faces", at), levels.size(), faces_at);
  std::vector<std::vector<SimplicialPair::FaceTable>> faces(levels.size());
  for (std::size_t q = 0; q < levels.size(); ++q) {
    const std::string level_at = pointer_child(faces_at, q);
    array_at(faces_node[q], q == 0 ? 0 : q + 1, level_at);
    for (std::size_t i = 0; i < faces_node[q].size(); ++i) {
      const std::string table_at = pointer_child(level_at, i);
      array_at(faces_node[q][i], levels[q].y_size, table_at);
      SimplicialPair::FaceTable table;
      for (std::size_t e = 0; e < faces_node[q][i].size(); ++e) {
        table.push_back(index_at(faces_node[q][i][e], pointer_child(table_at, e)));
      }
      faces[q].push_back(std::move(table));
    }
  }
  try {
    return SimplicialPair(std::move(levels), std::move(faces));
  } catch (const UsageError& e) {
    throw ConfigError(at, e.what());
  }
}

FieldSpec field_from(const std::string& text, const std::string& at) {
  try {
    return FieldSpec::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(at, e.what());
  }
}

}  // namespace

json parse_config_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string reason = e.what();
    if (auto at = reason.find(": "); at != std::string::npos) reason = reason.substr(at + 2);
    throw ConfigError(std::to_string(line) + ":" + std::to_string(col), reason);
  }
}

Job resolve_job(const Options& options, const std::optional<json>& config) {
  if (config.has_value() == options.fixture.has_value()) {
    throw UsageError("exactly one of --config and --fixture is required");
  }
  if (config && !config->is_object()) throw ConfigError("", "expected a top-level object");

  FieldSpec field = FieldSpec::rational();
  if (options.field) {
    field = field_from(*options.field, "--field");
  } else if (config && config->contains("field")) {
    const json& f = (*config)["field"];
    if (!f.is_string()) throw ConfigError("/field", "expected \"Q\" or a prime as a string");
    field = field_from(f.get<std::string>(), "/field");
  }

  std::size_t q_max = kDefaultQMax;
  if (options.q_max) {
    q_max = *options.q_max;
  } else if (config && config->contains("q_max")) {
    q_max = index_at((*config)["q_max"], "/q_max");
  }

  json echo;
  echo["field"] = field.to_string();
  echo["q_max"] = q_max;

  std::optional<ResolvedAlgebra> a, b;
  const json* eps_node = nullptr;
  const json* module_node = nullptr;
  if (options.fixture) {
    auto colon = options.fixture->find(':');
    std::string a_name = options.fixture->substr(0, colon);
    std::string b_name = colon == std::string::npos ? "ground_field" : options.fixture->substr(colon + 1);
    a = algebra_at(a_name, field, "--fixture");
    b = algebra_at(b_name, field, "--fixture");
  } else {
    a = algebra_at(require(*config, "A", ""), field, "/A");
    b = algebra_at(require(*config, "B", ""), field, "/B");
    if (config->contains("epsilon")) eps_node = &(*config)["epsilon"];
    if (config->contains("M")) module_node = &(*config)["M"];
  }
  echo["A"] = a->echo;
  echo["B"] = b->echo;
  auto epsilon = epsilon_at(eps_node, *b, *a, "/epsilon", echo["epsilon"]);
  auto module = module_at(module_node, a->algebra, "/M", echo["M"]);
  Triple triple{a->algebra, b->algebra, std::move(epsilon), std::move(module)};

  std::string pair_name = "disk-pair";
  std::optional<SimplicialPair> pair;
  bool explicit_pair = false;
  if (options.command == "verify-theorem" || options.command == "phi") {
    // These commands fix the pair: the disk pair (and, for phi, its circle).
  } else if (options.pair) {
    pair_name = *options.pair;
  } else if (config && config->contains("pair")) {
    const json& p = (*config)["pair"];
    if (p.is_string()) {
      pair_name = p.get<std::string>();
    } else {
      pair = explicit_pair_at(p, "/pair");
      pair_name = "config";
      explicit_pair = true;
      echo["pair"] = p;
    }
  }
  if (!pair) {
    try {
      pair = builtin_pair(pair_name, q_max + 1);
    } catch (const UsageError& e) {
      throw ConfigError(options.pair ? "--pair" : "/pair", e.what());
    }
    echo["pair"] = pair_name;
  }
  return Job{std::move(triple), std::move(*pair), pair_name, explicit_pair, q_max, std::move(echo)};
}

std::string digest(const json& echo) {
  const std::string text = echo.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return "sha256:" + hex;
}

}  // namespace hochschild::cli
