#include "posetrep/poset_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "posetrep/errors.hpp"

namespace posetrep {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

// Whitespace separates tokens; '=' and ';' are tokens on their own so the
// format works with or without spaces around them. '<' and ':' stay inside
// tokens ("a<b", "a:1"); none of these characters can appear in a label.
std::vector<Token> scan(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '=' || line[i] == ';') {
      out.push_back({std::string(1, line[i]), static_cast<int>(i + 1)});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '=' && line[j] != ';') {
      ++j;
    }
    out.push_back({line.substr(i, j - i), static_cast<int>(i + 1)});
    i = j;
  }
  return out;
}

Int parse_int(const Token& tok, int line_no) {
  Int value = 0;
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw SyntaxError(line_no, tok.column, "expected an integer, got '" + tok.text + "'");
  }
  return value;
}

DimVector parse_dim_tokens(const std::vector<Token>& toks, std::size_t start, int line_no,
                           bool allow_negative, const std::string& name) {
  if (start >= toks.size()) {
    throw SyntaxError(line_no, 1, "dimension vector '" + name + "' has no ambient dimension");
  }
  DimVector dims;
  dims.alpha0 = parse_int(toks[start], line_no);
  if (!allow_negative && dims.alpha0 < 0) {
    throw NegativeDimensionError("negative ambient dimension in vector '" + name + "'");
  }
  if (start + 1 >= toks.size() || toks[start + 1].text != ";") {
    const int col = start + 1 < toks.size() ? toks[start + 1].column
                                            : toks[start].column + static_cast<int>(toks[start].text.size());
    throw SyntaxError(line_no, col, "expected ';' after the ambient dimension");
  }
  for (std::size_t i = start + 2; i < toks.size(); ++i) {
    const Token& tok = toks[i];
    const auto colon = tok.text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.text.size()) {
      throw SyntaxError(line_no, tok.column, "expected 'label:value', got '" + tok.text + "'");
    }
    const std::string label = tok.text.substr(0, colon);
    const Token value_tok{tok.text.substr(colon + 1), tok.column + static_cast<int>(colon) + 1};
    const Int value = parse_int(value_tok, line_no);
    if (!allow_negative && value < 0) {
      throw NegativeDimensionError("negative dimension for element '" + label + "' in vector '" +
                                   name + "'");
    }
    if (!dims.alpha.emplace(label, value).second) {
      throw DuplicateLabelError("element '" + label + "' listed twice in dimension vector '" +
                                name + "'");
    }
  }
  return dims;
}

void validate_dims_against(const Poset& poset, const DimVector& dims, const std::string& name,
                           int line_no, int col) {
  for (const auto& [label, value] : dims.alpha) {
    if (!poset.contains(label)) {
      throw UnknownLabelError("dimension vector '" + name + "' references unknown element '" +
                              label + "'");
    }
  }
  for (const auto& label : poset.labels()) {
    if (!dims.alpha.count(label)) {
      throw SyntaxError(line_no, col,
                        "dimension vector '" + name + "' missing a value for element '" + label +
                            "'");
    }
  }
}

std::string escape_dot(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

const DimVector* PosetFile::find_dims(const std::string& name) const {
  for (const auto& [dim_name, dims] : this->dims) {
    if (dim_name == name) return &dims;
  }
  return nullptr;
}

PosetFile parse_poset_file(const std::string& text) {
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  struct PendingDim {
    std::string name;
    DimVector dims;
    int line = 0;
    int column = 0;
  };
  std::vector<PendingDim> pending;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const auto toks = scan(raw);
    if (toks.empty()) continue;

    const Token& head = toks[0];
    if (head.text == "elements") {
      if (toks.size() < 2 || toks[1].text != "=") {
        throw SyntaxError(line_no, head.column, "expected '=' after 'elements'");
      }
      if (elements) {
        throw SyntaxError(line_no, head.column, "duplicate 'elements' line");
      }
      elements.emplace();
      for (std::size_t i = 2; i < toks.size(); ++i) elements->push_back(toks[i].text);
    } else if (head.text == "order") {
      if (toks.size() < 2 || toks[1].text != "=") {
        throw SyntaxError(line_no, head.column, "expected '=' after 'order'");
      }
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const Token& tok = toks[i];
        const auto lt = tok.text.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == tok.text.size() ||
            tok.text.find('<', lt + 1) != std::string::npos) {
          throw SyntaxError(line_no, tok.column,
                            "expected 'lower<upper', got '" + tok.text + "'");
        }
        relations.emplace_back(tok.text.substr(0, lt), tok.text.substr(lt + 1));
      }
    } else if (head.text == "dim") {
      std::string name;
      std::size_t payload = 0;
      if (toks.size() >= 2 && toks[1].text == "=") {
        name = "main";
        payload = 2;
      } else if (toks.size() >= 3 && toks[2].text == "=" && toks[1].text != ";") {
        name = toks[1].text;
        payload = 3;
      } else {
        throw SyntaxError(line_no, head.column, "expected 'dim [name] = ...'");
      }
      for (const auto& entry : pending) {
        if (entry.name == name) {
          throw DuplicateLabelError("duplicate dimension vector '" + name + "'");
        }
      }
      pending.push_back(
          {name, parse_dim_tokens(toks, payload, line_no, false, name), line_no, head.column});
    } else {
      throw SyntaxError(line_no, head.column,
                        "expected 'elements', 'order', or 'dim', got '" + head.text + "'");
    }
  }

  if (!elements) {
    throw SyntaxError(1, 1, "missing 'elements' line");
  }
  PosetFile file;
  file.poset = build_poset(*elements, relations);
  for (auto& entry : pending) {
    validate_dims_against(file.poset, entry.dims, entry.name, entry.line, entry.column);
    file.dims.emplace_back(std::move(entry.name), std::move(entry.dims));
  }
  return file;
}

PosetFile load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  PosetFile file = parse_poset_file(buffer.str());
  file.path = path;
  return file;
}

std::string render_poset_file(const PosetFile& file) {
  std::ostringstream out;
  out << "elements =";
  for (const auto& label : file.poset.labels()) out << ' ' << label;
  out << '\n';
  const auto covers = file.poset.hasse_covers();
  if (!covers.empty()) {
    out << "order =";
    for (const auto& [lo, hi] : covers) out << ' ' << lo << '<' << hi;
    out << '\n';
  }
  for (const auto& [name, dims] : file.dims) {
    out << "dim " << name << " = " << dims.alpha0 << " ;";
    for (const auto& label : file.poset.labels()) out << ' ' << label << ':' << dims.alpha.at(label);
    out << '\n';
  }
  return out.str();
}

std::string dot_export(const Poset& p, const DimVector* dims) {
  if (dims) dim_row(p, *dims);  // validates coverage
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (const auto& label : p.labels()) {
    out << "  \"" << escape_dot(label) << "\" [label=\"" << escape_dot(label);
    if (dims) out << ':' << dims->alpha.at(label);
    out << "\"];\n";
  }
  for (const auto& [lo, hi] : p.hasse_covers()) {
    out << "  \"" << escape_dot(lo) << "\" -> \"" << escape_dot(hi) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

DimVector parse_dim_payload(const std::string& payload, const Poset& poset) {
  const auto toks = scan(payload);
  DimVector dims = parse_dim_tokens(toks, 0, 1, true, "inline");
  validate_dims_against(poset, dims, "inline", 1, 1);
  return dims;
}

}  // namespace posetrep
