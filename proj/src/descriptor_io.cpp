#include "weyl/descriptor_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace weyl {

namespace {

struct Field {
  std::string_view text;
  int line;
  int column;
};

std::string_view trim(std::string_view s, int* shift = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  if (shift) *shift = static_cast<int>(b);
  return s.substr(b, e - b);
}

[[noreturn]] void fail(const Field& f, const std::string& msg) { throw ParseError(msg, f.line, f.column); }

long long parse_integer(const Field& f) {
  std::string s(f.text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    fail(f, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) fail(f, "expected an integer, got '" + s + "'");
  return v;
}

std::optional<long long> parse_optional_integer(const Field& f) {
  if (f.text == "unknown") return std::nullopt;
  return parse_integer(f);
}

std::vector<GroupDescriptor> parse_points(const Field& f) {
  std::vector<GroupDescriptor> out;
  std::size_t pos = 0;
  while (pos <= f.text.size()) {
    std::size_t comma = f.text.find(',', pos);
    if (comma == std::string_view::npos) comma = f.text.size();
    int shift = 0;
    auto item = trim(f.text.substr(pos, comma - pos), &shift);
    Field sub{item, f.line, f.column + static_cast<int>(pos) + shift};
    if (item.empty()) {
      if (f.text.empty()) break;
      fail(sub, "empty group name in point list");
    }
    try {
      out.push_back(GroupDescriptor::parse(item));
    } catch (const std::invalid_argument& e) {
      fail(sub, e.what());
    }
    pos = comma + 1;
  }
  return out;
}

Pi1Descriptor parse_pi1(const Field& f) {
  try {
    return Pi1Descriptor::parse(f.text);
  } catch (const std::invalid_argument& e) {
    fail(f, e.what());
  }
}

CoverEntry parse_cover(const Field& f) {
  std::vector<Field> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t semi = f.text.find(';', pos);
    std::size_t end = semi == std::string_view::npos ? f.text.size() : semi;
    int shift = 0;
    auto item = trim(f.text.substr(pos, end - pos), &shift);
    parts.push_back({item, f.line, f.column + static_cast<int>(pos) + shift});
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (parts.size() != 4) fail(f, "cover expects 'degree; euler; signature; points'");
  CoverEntry c;
  c.degree = parse_integer(parts[0]);
  c.euler = parse_integer(parts[1]);
  c.signature = parse_integer(parts[2]);
  c.points = parse_points(parts[3]);
  return c;
}

}  // namespace

OrbifoldDescriptor parse_descriptor(std::string_view text) {
  static const std::set<std::string, std::less<>> kKeys = {"name", "euler", "signature", "points", "b1", "b2+",
                                                          "b2-", "h1_order", "pi1", "pi1_orb", "eta_extra", "cover"};
  OrbifoldDescriptor d;
  d.pi1 = Pi1Descriptor::unknown();
  d.pi1_orb = Pi1Descriptor::unknown();
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(start, nl - start);
    ++line_no;
    start = nl + 1;

    std::string_view line = raw;
    auto content = trim(line);
    if (content.empty() || content.front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    std::size_t eq = line.find('=');
    int key_shift = 0;
    if (eq == std::string_view::npos) {
      trim(line, &key_shift);
      throw ParseError("expected 'key = value'", line_no, key_shift + 1);
    }
    auto key = trim(line.substr(0, eq), &key_shift);
    int value_shift = 0;
    auto value = trim(line.substr(eq + 1), &value_shift);
    Field kf{key, line_no, key_shift + 1};
    Field vf{value, line_no, static_cast<int>(eq) + 2 + value_shift};

    if (!kKeys.contains(key)) fail(kf, "unknown key '" + std::string(key) + "'");
    if (key != "cover" && !seen.insert(std::string(key)).second) fail(kf, "duplicate key '" + std::string(key) + "'");

    if (key == "name") {
      d.name = std::string(value);
    } else if (key == "euler") {
      d.euler = parse_integer(vf);
    } else if (key == "signature") {
      d.signature = parse_integer(vf);
    } else if (key == "points") {
      d.points = parse_points(vf);
    } else if (key == "b1") {
      d.b1 = parse_optional_integer(vf);
    } else if (key == "b2+") {
      d.b2_plus = parse_optional_integer(vf);
    } else if (key == "b2-") {
      d.b2_minus = parse_optional_integer(vf);
    } else if (key == "h1_order") {
      if (value == "inf") {
        d.h1_order = H1Order::infinity();
      } else if (auto v = parse_optional_integer(vf)) {
        d.h1_order = H1Order::finite(*v);
      }
    } else if (key == "pi1") {
      d.pi1 = parse_pi1(vf);
    } else if (key == "pi1_orb") {
      d.pi1_orb = parse_pi1(vf);
    } else if (key == "eta_extra") {
      if (value != "unknown") {
        try {
          d.eta_extra = Rational::parse(value);
        } catch (const std::invalid_argument& e) {
          fail(vf, e.what());
        }
      }
    } else if (key == "cover") {
      d.cover_data.push_back(parse_cover(vf));
    }
    if (nl == text.size()) break;
  }
  if (!seen.contains("euler")) throw ParseError("missing required key 'euler'", line_no, 1);
  if (!seen.contains("signature")) throw ParseError("missing required key 'signature'", line_no, 1);
  if (!seen.contains("pi1_orb") && d.points.empty()) d.pi1_orb = d.pi1;
  validate(d);
  return d;
}

OrbifoldDescriptor read_descriptor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open descriptor file '" + path + "'", 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

std::string render_points(const std::vector<GroupDescriptor>& points) {
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ", ";
    s += points[i].name();
  }
  return s;
}

std::string render_descriptor(const OrbifoldDescriptor& d) {
  auto opt = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string("unknown"); };
  std::ostringstream os;
  os << "name = " << d.name << "\n";
  os << "euler = " << d.euler << "\n";
  os << "signature = " << d.signature << "\n";
  os << "points = " << render_points(d.points) << "\n";
  os << "b1 = " << opt(d.b1) << "\n";
  os << "b2+ = " << opt(d.b2_plus) << "\n";
  os << "b2- = " << opt(d.b2_minus) << "\n";
  os << "h1_order = " << (d.h1_order ? d.h1_order->str() : std::string("unknown")) << "\n";
  os << "pi1 = " << d.pi1.str() << "\n";
  os << "pi1_orb = " << d.pi1_orb.str() << "\n";
  os << "eta_extra = " << (d.eta_extra ? d.eta_extra->str() : std::string("unknown")) << "\n";
  for (const auto& c : d.cover_data) {
    os << "cover = " << c.degree << "; " << c.euler << "; " << c.signature << "; " << render_points(c.points) << "\n";
  }
  return os.str();
}

}  // namespace weyl
