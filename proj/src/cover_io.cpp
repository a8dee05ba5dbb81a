#include "abcover/cover_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "abcover/errors.hpp"

namespace abcover::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::int64_t parse_int64(std::string_view s, std::size_t line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

CoverData parse_cover(std::string_view text) {
  std::optional<FiniteAbelianGroup> group;
  struct Pending {
    std::size_t line;
    BranchComponent comp;
  };
  std::vector<Pending> pending;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'group:' or 'component:'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (key == "group") {
      if (group) throw ParseError(line_no, "duplicate group line");
      std::vector<int> factors;
      for (auto f : split(value, ',')) factors.push_back(static_cast<int>(parse_int64(f, line_no, "invariant factor")));
      try {
        group = FiniteAbelianGroup::from_invariant_factors(factors);
      } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "component") {
      if (!group) throw ParseError(line_no, "component before group line");
      const auto fields = split(value, ';');
      if (fields.size() < 2 || fields.size() > 3) {
        throw ParseError(line_no, "component needs 'label ; degree [; name]'");
      }
      BranchComponent comp;
      for (auto c : split(fields[0], ',')) comp.label.coords.push_back(static_cast<int>(parse_int64(c, line_no, "label coordinate")));
      comp.degree = parse_int64(fields[1], line_no, "degree");
      if (fields.size() == 3) comp.name = std::string(fields[2]);
      try {
        group->check(comp.label);
      } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
      }
      if (comp.label == group->zero()) throw ParseError(line_no, "zero label is not allowed");
      if (comp.degree < 1) throw ParseError(line_no, "degree must be >= 1");
      pending.push_back({line_no, std::move(comp)});
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!group) throw ParseError(0, "missing group line");
  CoverData cover{*group, {}};
  for (auto& p : pending) cover.components.push_back(std::move(p.comp));
  cover::validate(cover);
  return cover;
}

CoverData parse_cover_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cover(buf.str());
}

std::string serialize_cover(const CoverData& cover) {
  std::ostringstream os;
  os << "group: " << cover.group.notation() << '\n';
  for (const auto& c : cover.components) {
    os << "component: ";
    for (std::size_t i = 0; i < c.label.coords.size(); ++i) os << (i ? "," : "") << c.label.coords[i];
    os << " ; " << c.degree;
    if (!c.name.empty()) os << " ; " << c.name;
    os << '\n';
  }
  return os.str();
}

}  // namespace abcover::io
