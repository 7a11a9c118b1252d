#include "clutterlab/io.hpp"

#include <istream>
#include <sstream>

namespace clutterlab {

namespace {

// Meaningful lines of the text formats: blank and `#` lines dropped.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

int parse_header(const std::string& line, const std::string& keyword) {
  std::istringstream ss(line);
  std::string word;
  long long value = -1;
  if (!(ss >> word >> value) || word != keyword || value < 0 || value > 64)
    throw Error(Errc::ParseError,
                "expected header `" + keyword + " <n>`, got: " + line);
  std::string extra;
  if (ss >> extra)
    throw Error(Errc::ParseError, "trailing tokens in header: " + line);
  return static_cast<int>(value);
}

ElemSet parse_member_line(const std::string& line, int n) {
  std::istringstream ss(line);
  std::string tok;
  ElemSet out;
  int prev = 0;
  bool dash = false, any = false;
  while (ss >> tok) {
    if (tok == "-") {
      dash = true;
      continue;
    }
    std::size_t pos = 0;
    long long e = 0;
    try {
      e = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size())
      throw Error(Errc::ParseError, "bad element token `" + tok + "`");
    if (e < 1 || e > n)
      throw Error(Errc::ElementOutOfRange,
                  "element " + tok + " outside [1," + std::to_string(n) + "]");
    if (e <= prev)
      throw Error(Errc::ParseError,
                  "elements must be strictly ascending: " + line);
    prev = static_cast<int>(e);
    out = out.with(prev);
    any = true;
  }
  if (dash && any)
    throw Error(Errc::ParseError, "`-` must stand alone: " + line);
  if (!dash && !any)
    throw Error(Errc::ParseError, "empty member line");
  return out;
}

}  // namespace

Clutter parse_clutter(std::istream& in) {
  const std::vector<std::string> lines = content_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "missing clutter header");
  const int n = parse_header(lines[0], "clutter");
  std::vector<ElemSet> members;
  for (std::size_t i = 1; i < lines.size(); ++i)
    members.push_back(parse_member_line(lines[i], n));
  return Clutter::validate(n, std::move(members));
}

Clutter parse_clutter_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_clutter(ss);
}

std::string format_clutter(const Clutter& c) {
  std::string out = "clutter " + std::to_string(c.ground_size()) + "\n";
  for (ElemSet m : c.members()) {
    if (m.empty()) {
      out += "-\n";
      continue;
    }
    bool first = true;
    for (int e : m.elements()) {
      if (!first) out += " ";
      out += std::to_string(e);
      first = false;
    }
    out += "\n";
  }
  return out;
}

SetSystem parse_setsystem(std::istream& in) {
  const std::vector<std::string> lines = content_lines(in);
  if (lines.empty()) throw Error(Errc::ParseError, "missing setsystem header");
  const int d = parse_header(lines[0], "setsystem");
  std::vector<ElemSet> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    std::string word, extra;
    ss >> word;
    if (ss >> extra)
      throw Error(Errc::ParseError, "one point per line: " + lines[i]);
    if (static_cast<int>(word.size()) != d)
      throw Error(Errc::ParseError,
                  "point `" + word + "` is not " + std::to_string(d) +
                      " characters");
    ElemSet p;
    for (int j = 0; j < d; ++j) {
      if (word[static_cast<std::size_t>(j)] == '1')
        p = p.with(j + 1);
      else if (word[static_cast<std::size_t>(j)] != '0')
        throw Error(Errc::ParseError, "point must be a 0/1 string: " + word);
    }
    points.push_back(p);
  }
  return make_set_system(d, std::move(points));
}

SetSystem parse_setsystem_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_setsystem(ss);
}

std::string format_setsystem(const SetSystem& s) {
  std::string out = "setsystem " + std::to_string(s.dimension) + "\n";
  for (ElemSet p : s.points) {
    for (int i = 1; i <= s.dimension; ++i) out += p.contains(i) ? "1" : "0";
    out += "\n";
  }
  return out;
}

ParsedInput parse_any(std::istream& in) {
  std::stringstream buffered;
  buffered << in.rdbuf();
  const std::string text = buffered.str();
  std::istringstream probe(text);
  std::string word;
  probe >> word;
  ParsedInput out;
  if (word == "clutter")
    out.clutter = parse_clutter_text(text);
  else if (word == "setsystem")
    out.setsystem = parse_setsystem_text(text);
  else
    throw Error(Errc::ParseError, "unknown header `" + word + "`");
  return out;
}

nlohmann::json to_json(const ExtNat& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

nlohmann::json to_json(const ElemSet& s) {
  return nlohmann::json(s.elements());
}

nlohmann::json to_json(const Clutter& c) {
  nlohmann::json members = nlohmann::json::array();
  for (ElemSet m : c.members()) members.push_back(to_json(m));
  return {{"ground_size", c.ground_size()}, {"members", members}};
}

nlohmann::json to_json(const SetSystem& s) {
  nlohmann::json points = nlohmann::json::array();
  for (ElemSet p : s.points) {
    std::string row;
    for (int i = 1; i <= s.dimension; ++i) row += p.contains(i) ? "1" : "0";
    points.push_back(row);
  }
  return {{"dimension", s.dimension}, {"points", points}};
}

nlohmann::json to_json(const MinCoverGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (ElemSet e : g.edges) edges.push_back(to_json(e));
  nlohmann::json comps = nlohmann::json::array();
  for (const Component& comp : g.components)
    comps.push_back({{"U", to_json(comp.side_u)}, {"V", to_json(comp.side_v)}});
  return {{"vertex_count", g.vertex_count},
          {"edges", edges},
          {"components", comps}};
}

nlohmann::json to_json(const GscInequality& q) {
  return {{"I", to_json(q.positive)}, {"J", to_json(q.negated)}};
}

nlohmann::json to_json(const SidePattern& p) {
  nlohmann::json out = nlohmann::json::array();
  for (SideChoice ch : p)
    out.push_back(ch == SideChoice::Skip ? "skip"
                                         : (ch == SideChoice::U ? "U" : "V"));
  return out;
}

nlohmann::json to_json(const ParamReport& r) {
  nlohmann::json witnesses = nlohmann::json::object();
  if (r.rainbow_witness) witnesses["mu"] = to_json(*r.rainbow_witness);
  if (r.core_cover_witness) witnesses["mu1"] = to_json(*r.core_cover_witness);
  if (r.mu2_witness) witnesses["mu2"] = to_json(*r.mu2_witness);
  if (r.mu3_witness) witnesses["mu3"] = to_json(*r.mu3_witness);
  if (r.lambda_witness) witnesses["lambda"] = to_json(*r.lambda_witness);
  return {{"mu", to_json(r.mu)},       {"mu1", to_json(r.mu1)},
          {"mu2", to_json(r.mu2)},     {"mu3", to_json(r.mu3)},
          {"lambda", to_json(r.lambda)}, {"witnesses", witnesses}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json details = nlohmann::json::array();
  for (const ViolationDetail& v : r.violation_details)
    details.push_back({{"check", v.check},
                       {"instance", v.instance},
                       {"detail", v.detail}});
  return {{"instances_total", r.instances_total},
          {"clean_tangled_count", r.clean_tangled_count},
          {"violations", r.violations},
          {"violation_details", details},
          {"runtime_ms", r.runtime_ms},
          {"config", r.config_echo}};
}

}  // namespace clutterlab
