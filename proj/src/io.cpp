#include "szq/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "szq/error.hpp"
#include "szq/interval_map.hpp"

namespace szq {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  if (s.empty()) throw Error(ErrorCode::Parse, "empty number in " + std::string(what));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw Error(ErrorCode::Parse, "cannot parse '" + s + "' in " + std::string(what));
  }
  return v;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open file '" + path + "'");
  return in;
}

// Lines with comments and surrounding blanks removed; empty lines dropped.
std::vector<std::string> content_lines(const std::string& path) {
  std::ifstream in = open(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string_view t = trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view t = trim(text);
  const auto comma = t.find(',');
  if (comma == std::string_view::npos) return {parse_double(t, "complex literal"), 0.0};
  return {parse_double(t.substr(0, comma), "complex literal"),
          parse_double(t.substr(comma + 1), "complex literal")};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    out.push_back(parse_complex(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<Complex> read_moment_file(const std::string& path) {
  std::vector<Complex> out;
  for (const std::string& line : content_lines(path)) {
    std::istringstream ss(line);
    std::string re;
    std::string im;
    std::string extra;
    ss >> re >> im >> extra;
    if (!extra.empty()) throw Error(ErrorCode::Parse, "moment line has more than two fields: " + line);
    out.emplace_back(parse_double(re, path), im.empty() ? 0.0 : parse_double(im, path));
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "moment file '" + path + "' is empty");
  return out;
}

std::vector<double> read_density_file(const std::string& path) {
  const std::vector<std::string> lines = content_lines(path);
  if (lines.empty()) throw Error(ErrorCode::Parse, "density file '" + path + "' is empty");
  const double size = parse_double(lines[0], path + " (grid_size header)");
  if (size < 1.0 || size != std::floor(size)) {
    throw Error(ErrorCode::Parse, "density header must be a positive integer grid size");
  }
  const auto count = static_cast<std::size_t>(size);
  if (lines.size() - 1 != count) {
    throw Error(ErrorCode::Parse, "density file declares " + std::to_string(count) +
                                      " samples but has " + std::to_string(lines.size() - 1));
  }
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 1; i < lines.size(); ++i) out.push_back(parse_double(lines[i], path));
  return out;
}

std::vector<double> read_interval_moment_file(const std::string& path) {
  std::vector<double> out;
  for (const std::string& line : content_lines(path)) out.push_back(parse_double(line, path));
  if (out.empty()) throw Error(ErrorCode::Parse, "interval moment file '" + path + "' is empty");
  return out;
}

MeasureSpec parse_measure(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string arg = colon == std::string_view::npos ? std::string() : std::string(text.substr(colon + 1));
  auto need_arg = [&] {
    if (arg.empty()) {
      throw Error(ErrorCode::Parse, "measure '" + std::string(kind) + "' needs a parameter after ':'");
    }
  };
  if (kind == "lebesgue") {
    if (!arg.empty()) throw Error(ErrorCode::Parse, "lebesgue takes no parameter");
    return MeasureSpec::lebesgue();
  }
  if (kind == "bernstein-szego") {
    need_arg();
    return MeasureSpec::bernstein_szego(parse_complex_list(arg));
  }
  if (kind == "geronimus") {
    need_arg();
    return MeasureSpec::geronimus(parse_complex(arg));
  }
  if (kind == "verblunsky") {
    need_arg();
    return MeasureSpec::explicit_verblunsky(VerblunskySequence(parse_complex_list(arg)));
  }
  if (kind == "moments") {
    need_arg();
    return MeasureSpec::explicit_moments(read_moment_file(arg));
  }
  if (kind == "density") {
    need_arg();
    return MeasureSpec::density_samples(read_density_file(arg));
  }
  if (kind == "interval-moments") {
    need_arg();
    return interval_measure(read_interval_moment_file(arg));
  }
  throw Error(ErrorCode::Parse, "unknown measure '" + std::string(kind) +
                                    "' (expected lebesgue, bernstein-szego, geronimus, verblunsky, "
                                    "moments, density or interval-moments)");
}

RuleFile read_rule_file(const std::string& path) {
  std::ifstream in = open(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  RuleFile rf;
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    try {
      const nlohmann::json j = nlohmann::json::parse(body);
      rf.nodes = j.at("nodes").get<std::vector<double>>();
      rf.weights = j.at("weights").get<std::vector<double>>();
      if (j.contains("m")) rf.m = j.at("m").get<std::size_t>();
      if (j.contains("measure")) rf.measure_id = j.at("measure").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, "rule file '" + path + "': " + e.what());
    }
  } else {
    for (const std::string& line : content_lines(path)) {
      if (line.rfind("node_rad", 0) == 0) continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::Parse, "rule CSV line lacks a comma: " + line);
      rf.nodes.push_back(parse_double(std::string_view(line).substr(0, comma), path));
      rf.weights.push_back(parse_double(std::string_view(line).substr(comma + 1), path));
    }
  }
  if (rf.nodes.empty() || rf.nodes.size() != rf.weights.size()) {
    throw Error(ErrorCode::Parse, "rule file '" + path + "' needs equally many nodes and weights");
  }
  return rf;
}

}  // namespace szq
