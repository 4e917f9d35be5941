#include "greynoise/phi_descriptor.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace greynoise {

namespace {

using Block = std::map<std::string, std::string>;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

void emit_node(const MLFunction& phi, std::vector<std::string>& blocks) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  const std::size_t my_index = blocks.size();
  blocks.emplace_back();   // reserve position

  switch (phi.kind()) {
    case MLFunction::Kind::Exp:
      os << "kind=exp\norder=" << phi.order() << "\n";
      break;
    case MLFunction::Kind::MittagLeffler:
      os << "kind=mittag_leffler\nalpha=" << phi.alpha()
         << "\norder=" << phi.order() << "\n";
      break;
    case MLFunction::Kind::Custom: {
      os << "kind=custom\ntaylor=";
      for (std::size_t k = 0; k < phi.taylor().size(); ++k) {
        if (k) os << ',';
        os << phi.taylor()[k];
      }
      os << "\n";
      break;
    }
    case MLFunction::Kind::Mix: {
      os << "kind=mix\nweights=";
      for (std::size_t k = 0; k < phi.mix_weights().size(); ++k) {
        if (k) os << ',';
        os << phi.mix_weights()[k];
      }
      os << "\nchildren=\n";   // indices fixed up after the children emit
      break;
    }
    case MLFunction::Kind::Product:
      os << "kind=product\nchildren=\n";
      break;
    case MLFunction::Kind::Compose:
      os << "kind=compose\nchildren=\n";
      break;
  }
  blocks[my_index] = os.str();

  if (!phi.children().empty()) {
    std::vector<std::size_t> child_ids;
    for (const auto& c : phi.children()) {
      child_ids.push_back(blocks.size());
      emit_node(*c, blocks);
    }
    // rewrite the children= line with the real indices
    std::string& text = blocks[my_index];
    std::string ids;
    for (std::size_t k = 0; k < child_ids.size(); ++k) {
      if (k) ids += ',';
      ids += std::to_string(child_ids[k]);
    }
    const std::string key = "children=";
    const std::size_t pos = text.find(key);
    const std::size_t eol = text.find('\n', pos);
    text = text.substr(0, pos + key.size()) + ids + text.substr(eol);
  }
}

MLFunction build(const std::vector<Block>& blocks, std::size_t index);

std::vector<MLFunction> build_children(const std::vector<Block>& blocks,
                                       const Block& b) {
  auto it = b.find("children");
  if (it == b.end()) throw std::invalid_argument("descriptor: missing children");
  std::vector<MLFunction> out;
  for (const std::string& tok : split(it->second, ',')) {
    const std::size_t idx = std::stoul(trim(tok));
    if (idx >= blocks.size()) {
      throw std::invalid_argument("descriptor: child index out of range");
    }
    out.push_back(build(blocks, idx));
  }
  return out;
}

MLFunction build(const std::vector<Block>& blocks, std::size_t index) {
  const Block& b = blocks[index];
  auto it = b.find("kind");
  if (it == b.end()) throw std::invalid_argument("descriptor: missing kind");
  const std::string kind = it->second;
  int order = MLFunction::kDefaultOrder;
  if (auto o = b.find("order"); o != b.end()) order = std::stoi(o->second);

  if (kind == "exp") return MLFunction::exponential(order);
  if (kind == "mittag_leffler" || kind == "ml") {
    auto a = b.find("alpha");
    if (a == b.end()) throw std::invalid_argument("descriptor: mittag_leffler needs alpha");
    return MLFunction::mittag_leffler(std::stod(a->second), order);
  }
  if (kind == "custom") {
    auto t = b.find("taylor");
    if (t == b.end()) throw std::invalid_argument("descriptor: custom needs taylor");
    std::vector<double> c;
    for (const std::string& tok : split(t->second, ',')) c.push_back(std::stod(trim(tok)));
    return MLFunction::custom(std::move(c));
  }
  if (kind == "mix") {
    auto w = b.find("weights");
    if (w == b.end()) throw std::invalid_argument("descriptor: mix needs weights");
    std::vector<double> weights;
    for (const std::string& tok : split(w->second, ',')) weights.push_back(std::stod(trim(tok)));
    auto children = build_children(blocks, b);
    if (children.size() != weights.size()) {
      throw std::invalid_argument("descriptor: mix weights/children mismatch");
    }
    std::vector<std::pair<double, MLFunction>> parts;
    for (std::size_t k = 0; k < children.size(); ++k) {
      parts.emplace_back(weights[k], std::move(children[k]));
    }
    return MLFunction::mix(parts);
  }
  if (kind == "product") {
    auto children = build_children(blocks, b);
    if (children.size() != 2) throw std::invalid_argument("descriptor: product needs 2 children");
    return MLFunction::product(children[0], children[1]);
  }
  if (kind == "compose") {
    auto children = build_children(blocks, b);
    if (children.size() != 2) throw std::invalid_argument("descriptor: compose needs 2 children");
    return MLFunction::compose(children[0], children[1]);
  }
  throw std::invalid_argument("descriptor: unknown kind '" + kind + "'");
}

} // namespace

std::string serialize_descriptor(const MLFunction& phi) {
  std::vector<std::string> blocks;
  emit_node(phi, blocks);
  std::string out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += "\n";
    out += blocks[k];
  }
  return out;
}

MLFunction parse_descriptor(const std::string& text) {
  std::vector<Block> blocks;
  Block current;
  std::istringstream is(text);
  std::string line;
  auto flush = [&] {
    if (!current.empty()) {
      blocks.push_back(current);
      current.clear();
    }
  };
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("descriptor: expected key=value, got '" + line + "'");
    }
    current[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  flush();
  if (blocks.empty()) throw std::invalid_argument("descriptor: empty input");
  return build(blocks, 0);
}

MLFunction load_descriptor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("descriptor: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

MLFunction phi_from_cli_spec(const std::string& spec, int order) {
  if (spec == "exp") return MLFunction::exponential(order);
  if (spec.rfind("ml:", 0) == 0) {
    return MLFunction::mittag_leffler(std::stod(spec.substr(3)), order);
  }
  if (spec.rfind("file:", 0) == 0) return load_descriptor_file(spec.substr(5));
  throw std::invalid_argument("phi spec: expected exp | ml:<alpha> | file:<path>");
}

} // namespace greynoise
