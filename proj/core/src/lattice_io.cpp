#include "nonevade/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include "nonevade/error.hpp"

namespace nonevade {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

Lattice build(std::vector<std::string> labels,
              const std::vector<std::pair<std::string, std::string>>& cover_labels) {
  std::unordered_map<std::string, ElementIndex> index;
  for (ElementIndex i = 0; i < labels.size(); ++i) {
    try {
      validate_label(labels[i]);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    if (!index.emplace(labels[i], i).second)
      throw Error(ErrorCode::ParseError, "duplicate element '" + labels[i] + "'");
  }
  std::vector<std::pair<ElementIndex, ElementIndex>> covers;
  for (const auto& [u, v] : cover_labels) {
    auto iu = index.find(u), iv = index.find(v);
    if (iu == index.end() || iv == index.end())
      throw Error(ErrorCode::ParseError,
                  "cover '" + u + " " + v + "' refers to an element not in the element list");
    covers.emplace_back(iu->second, iv->second);
  }
  return Lattice(Poset::from_covers(std::move(labels), covers));
}

}  // namespace

Lattice parse_lattice(std::string_view text) {
  if (const auto body = trim(text); !body.empty() && body.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return lattice_from_json(doc);
  }

  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) parse_fail(line_no, "expected 'elements:' or 'cover:'");
    const auto key = trim(line.substr(0, colon));
    auto tokens = split_ws(line.substr(colon + 1));
    if (key == "elements") {
      if (elements) parse_fail(line_no, "duplicate 'elements' line");
      elements = std::move(tokens);
    } else if (key == "cover") {
      if (!elements) parse_fail(line_no, "'cover' before 'elements'");
      if (tokens.size() != 2) parse_fail(line_no, "'cover' takes exactly two elements");
      covers.emplace_back(tokens[0], tokens[1]);
    } else {
      parse_fail(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!elements) throw Error(ErrorCode::ParseError, "missing 'elements' line");
  return build(std::move(*elements), covers);
}

Lattice lattice_from_json(const nlohmann::json& doc) {
  try {
    auto labels = doc.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    if (doc.contains("covers"))
      for (const auto& c : doc.at("covers")) {
        if (!c.is_array() || c.size() != 2)
          throw Error(ErrorCode::ParseError, "each cover must be a pair [u, v]");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    return build(std::move(labels), covers);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed lattice JSON: ") + e.what());
  }
}

Lattice load_lattice(const std::filesystem::path& path) { return parse_lattice(read_file(path)); }

std::string format_lattice(const Lattice& lattice, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
  out << "elements:";
  for (const auto& l : lattice.labels()) out << ' ' << l;
  out << '\n';
  for (auto [u, v] : lattice.covers()) out << "cover: " << lattice.label(u) << ' ' << lattice.label(v) << '\n';
  return out.str();
}

nlohmann::json lattice_to_json(const Lattice& lattice) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [u, v] : lattice.covers()) covers.push_back({lattice.label(u), lattice.label(v)});
  return {{"elements", lattice.labels()}, {"covers", covers}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

}  // namespace nonevade
