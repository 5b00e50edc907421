#include "platen/stl.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "platen/error.hpp"
#include "platen/numfmt.hpp"

namespace platen {

namespace {

constexpr std::size_t kHeaderBytes = 80;
constexpr std::size_t kFacetBytes = 50;

void append_shortest(std::string& out, Vec3 v) {
  out += format_shortest(v.x);
  out += ' ';
  out += format_shortest(v.y);
  out += ' ';
  out += format_shortest(v.z);
}

void put_u32(std::vector<std::uint8_t>& bytes, std::size_t at, std::uint32_t value) {
  bytes[at] = static_cast<std::uint8_t>(value);
  bytes[at + 1] = static_cast<std::uint8_t>(value >> 8);
  bytes[at + 2] = static_cast<std::uint8_t>(value >> 16);
  bytes[at + 3] = static_cast<std::uint8_t>(value >> 24);
}

void put_f32(std::vector<std::uint8_t>& bytes, std::size_t at, double value) {
  put_u32(bytes, at, std::bit_cast<std::uint32_t>(static_cast<float>(value)));
}

std::uint32_t get_u32(std::string_view bytes, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[at])) |
         static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[at + 3])) << 24;
}

double get_f32(std::string_view bytes, std::size_t at) {
  return std::bit_cast<float>(get_u32(bytes, at));
}

// --- ascii ---------------------------------------------------------------

struct Token {
  std::string_view text;
  std::size_t line = 0;
};

std::vector<Token> tokenize(std::string_view data) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < data.size()) {
    const char ch = data[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch)) != 0) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < data.size() && std::isspace(static_cast<unsigned char>(data[i])) == 0) {
        ++i;
      }
      tokens.push_back({data.substr(start, i - start), line});
    }
  }
  return tokens;
}

class AsciiParser {
 public:
  explicit AsciiParser(std::string_view data) : tokens_(tokenize(data)) {}

  TriangleSoup parse() {
    expect("solid");
    skip_rest_of_line();
    TriangleSoup soup;
    while (peek() == "facet") {
      soup.facets.push_back(parse_facet());
    }
    expect("endsolid");
    skip_rest_of_line();
    if (at_ < tokens_.size()) {
      fail("trailing content after endsolid");
    }
    return soup;
  }

 private:
  StlFacet parse_facet() {
    StlFacet facet;
    expect("facet");
    expect("normal");
    facet.normal = parse_vec();
    expect("outer");
    expect("loop");
    expect("vertex");
    facet.v0 = parse_vec();
    expect("vertex");
    facet.v1 = parse_vec();
    expect("vertex");
    facet.v2 = parse_vec();
    expect("endloop");
    expect("endfacet");
    return facet;
  }

  Vec3 parse_vec() { return {parse_number(), parse_number(), parse_number()}; }

  double parse_number() {
    const Token tok = next("a number");
    double value = 0.0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    const std::from_chars_result res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end) {
      fail("line " + std::to_string(tok.line) + ": expected a number, got '" +
           std::string(tok.text) + "'");
    }
    return value;
  }

  void expect(std::string_view keyword) {
    const Token tok = next(keyword);
    if (tok.text != keyword) {
      fail("line " + std::to_string(tok.line) + ": expected '" + std::string(keyword) +
           "', got '" + std::string(tok.text) + "'");
    }
  }

  std::string_view peek() const {
    return at_ < tokens_.size() ? tokens_[at_].text : std::string_view{};
  }

  Token next(std::string_view wanted) {
    if (at_ >= tokens_.size()) {
      const std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
      fail("line " + std::to_string(line) + ": expected '" + std::string(wanted) +
           "', got end of input");
    }
    return tokens_[at_++];
  }

  // solid and endsolid may carry a free-form name; it spans to the line end
  void skip_rest_of_line() {
    if (at_ == 0 || at_ > tokens_.size()) return;
    const std::size_t line = tokens_[at_ - 1].line;
    while (at_ < tokens_.size() && tokens_[at_].line == line) ++at_;
  }

  [[noreturn]] static void fail(const std::string& why) { throw MalformedStl(why); }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

TriangleSoup parse_stl_binary(std::string_view data) {
  if (data.size() < kHeaderBytes + 4) {
    throw MalformedStl("binary STL is " + std::to_string(data.size()) +
                       " bytes; the header and facet count alone need 84");
  }
  const std::uint32_t count = get_u32(data, kHeaderBytes);
  const std::size_t expected = kHeaderBytes + 4 + kFacetBytes * count;
  if (data.size() != expected) {
    throw MalformedStl("binary STL is " + std::to_string(data.size()) +
                       " bytes, expected " + std::to_string(expected) + " for " +
                       std::to_string(count) + " facets");
  }
  TriangleSoup soup;
  soup.facets.reserve(count);
  for (std::uint32_t f = 0; f < count; ++f) {
    const std::size_t base = kHeaderBytes + 4 + kFacetBytes * f;
    std::array<double, 12> w{};
    for (std::size_t k = 0; k < w.size(); ++k) {
      w[k] = get_f32(data, base + 4 * k);
    }
    soup.facets.push_back({{w[0], w[1], w[2]},
                           {w[3], w[4], w[5]},
                           {w[6], w[7], w[8]},
                           {w[9], w[10], w[11]}});
  }
  return soup;
}

}  // namespace

std::string emit_stl_ascii(const Mesh& mesh, std::string_view solid_name) {
  if (!is_closed(mesh)) {
    throw NotClosedMesh("ascii STL output needs a watertight, consistently wound mesh");
  }
  const Mesh ccw = with_winding(mesh, Winding::CounterClockwise);

  std::string out = "solid ";
  out += solid_name;
  out += '\n';
  for (std::size_t f = 0; f < ccw.faces.size(); ++f) {
    out += "  facet normal ";
    append_shortest(out, face_normal(ccw, f));
    out += "\n    outer loop\n";
    const TriFace face = ccw.faces[f];
    for (std::uint32_t idx : {face.i0, face.i1, face.i2}) {
      out += "      vertex ";
      append_shortest(out, ccw.vertices[idx]);
      out += '\n';
    }
    out += "    endloop\n  endfacet\n";
  }
  out += "endsolid ";
  out += solid_name;
  out += '\n';
  return out;
}

std::vector<std::uint8_t> emit_stl_binary(const Mesh& mesh) {
  if (!is_closed(mesh)) {
    throw NotClosedMesh("binary STL output needs a watertight, consistently wound mesh");
  }
  const Mesh ccw = with_winding(mesh, Winding::CounterClockwise);
  if (ccw.faces.size() > 0xFFFFFFFFu) {
    throw TooManyFacets("binary STL cannot hold " + std::to_string(ccw.faces.size()) +
                        " facets");
  }

  std::vector<std::uint8_t> bytes(kHeaderBytes + 4 + kFacetBytes * ccw.faces.size(), 0);
  for (std::size_t i = 0; i < kBinaryStlTag.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>(kBinaryStlTag[i]);
  }
  put_u32(bytes, kHeaderBytes, static_cast<std::uint32_t>(ccw.faces.size()));

  for (std::size_t f = 0; f < ccw.faces.size(); ++f) {
    const std::size_t base = kHeaderBytes + 4 + kFacetBytes * f;
    const Vec3 n = face_normal(ccw, f);
    const TriFace face = ccw.faces[f];
    const Vec3 corners[3] = {ccw.vertices[face.i0], ccw.vertices[face.i1],
                             ccw.vertices[face.i2]};
    put_f32(bytes, base + 0, n.x);
    put_f32(bytes, base + 4, n.y);
    put_f32(bytes, base + 8, n.z);
    for (std::size_t c = 0; c < 3; ++c) {
      put_f32(bytes, base + 12 + 12 * c + 0, corners[c].x);
      put_f32(bytes, base + 12 + 12 * c + 4, corners[c].y);
      put_f32(bytes, base + 12 + 12 * c + 8, corners[c].z);
    }
    // attribute byte count stays zero
  }
  return bytes;
}

TriangleSoup parse_stl(std::string_view data) {
  if (data.empty()) throw MalformedStl("empty input");
  if (data.substr(0, 5) == "solid") {
    // a binary file may still open with these bytes in its header, so fall
    // back to the binary layout when the text grammar does not hold and the
    // byte length satisfies the binary law; otherwise the text diagnosis is
    // the honest one
    const bool binary_plausible =
        data.size() >= kHeaderBytes + 4 &&
        data.size() == kHeaderBytes + 4 + kFacetBytes * std::size_t{get_u32(data, kHeaderBytes)};
    try {
      return AsciiParser(data).parse();
    } catch (const MalformedStl&) {
      if (binary_plausible) return parse_stl_binary(data);
      throw;
    }
  }
  return parse_stl_binary(data);
}

WeldResult weld_vertices(const TriangleSoup& soup, double tol) {
  if (!(tol > 0.0)) {
    throw Error("weld tolerance must be positive, got " + std::to_string(tol));
  }
  if (soup.facets.empty()) throw Error("cannot weld an empty triangle soup");

  // coordinates bucketed on a tol-sized grid; a vertex can only weld onto
  // something in its own or a neighboring cell
  using Cell = std::array<std::int64_t, 3>;
  std::map<Cell, std::vector<std::uint32_t>> grid;
  std::vector<Vec3> kept;

  const auto cell_of = [tol](Vec3 p) -> Cell {
    return {static_cast<std::int64_t>(std::floor(p.x / tol)),
            static_cast<std::int64_t>(std::floor(p.y / tol)),
            static_cast<std::int64_t>(std::floor(p.z / tol))};
  };
  const auto weld_index = [&](Vec3 p) -> std::uint32_t {
    const Cell home = cell_of(p);
    std::uint32_t best = static_cast<std::uint32_t>(kept.size());
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dz = -1; dz <= 1; ++dz) {
          const auto it = grid.find({home[0] + dx, home[1] + dy, home[2] + dz});
          if (it == grid.end()) continue;
          for (const std::uint32_t idx : it->second) {
            const Vec3 d = kept[idx] - p;
            if (std::abs(d.x) <= tol && std::abs(d.y) <= tol && std::abs(d.z) <= tol &&
                idx < best) {
              best = idx;  // earliest occurrence wins, deterministically
            }
          }
        }
      }
    }
    if (best == kept.size()) {
      kept.push_back(p);
      grid[home].push_back(best);
    }
    return best;
  };

  std::vector<TriFace> faces;
  faces.reserve(soup.facets.size());
  std::size_t dropped = 0;
  for (const StlFacet& facet : soup.facets) {
    const std::uint32_t i0 = weld_index(facet.v0);
    const std::uint32_t i1 = weld_index(facet.v1);
    const std::uint32_t i2 = weld_index(facet.v2);
    if (i0 == i1 || i1 == i2 || i2 == i0 ||
        triangle_area(kept[i0], kept[i1], kept[i2]) <= kDegenerateAreaTol) {
      ++dropped;
      continue;
    }
    faces.push_back({i0, i1, i2});
  }
  if (faces.empty()) {
    throw Error("no facets survived welding (" + std::to_string(dropped) +
                " degenerate)");
  }
  return {make_mesh(std::move(kept), std::move(faces), Winding::CounterClockwise),
          dropped};
}

ValidationReport check_facet_normals(const TriangleSoup& soup, double tol) {
  ValidationReport report;
  for (std::size_t i = 0; i < soup.facets.size(); ++i) {
    const StlFacet& facet = soup.facets[i];
    const Vec3 raw = cross(facet.v1 - facet.v0, facet.v2 - facet.v0);
    const double len = norm(raw);
    if (len < kDegenerateAreaTol) continue;  // welding will drop it anyway
    const Vec3 computed = {raw.x / len, raw.y / len, raw.z / len};
    if (norm(computed - facet.normal) > tol) {
      report.add("normal_mismatch", Severity::Warning,
                 "facet " + std::to_string(i) + " stores a normal " +
                     format_shortest(norm(computed - facet.normal)) +
                     " away from the one its vertices imply",
                 {i});
    }
  }
  return report;
}

}  // namespace platen
