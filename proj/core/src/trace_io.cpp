#include "cachelab/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cachelab {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

}  // namespace

Trace parse_trace(std::string_view text) {
  Trace trace;
  std::size_t line_no = 0;
  bool events_started = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto& verb = words[0];
    if (verb == "file") {
      if (events_started) throw ParseError(line_no, "file declarations must precede events");
      if (words.size() != 4) throw ParseError(line_no, "expected 'file <id> <size> <cost>'");
      FileSpec spec;
      spec.id = std::string(words[1]);
      auto [p, ec] = std::from_chars(words[2].data(), words[2].data() + words[2].size(), spec.size);
      if (ec != std::errc() || p != words[2].data() + words[2].size()) {
        throw ParseError(line_no, "bad size '" + std::string(words[2]) + "'");
      }
      try {
        spec.cost = parse_rational(words[3]);
        trace.catalog.add(std::move(spec));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (verb == "req") {
      if (words.size() != 2) throw ParseError(line_no, "expected 'req <id>'");
      auto f = trace.catalog.find(words[1]);
      if (!f) throw ParseError(line_no, "unknown file '" + std::string(words[1]) + "'");
      trace.events.push_back(Event::request(*f));
      events_started = true;
    } else if (verb == "tick") {
      if (words.size() != 1) throw ParseError(line_no, "'tick' takes no arguments");
      trace.events.push_back(Event::tick());
      events_started = true;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(verb) + "'");
    }
    if (end == text.size()) break;
  }
  return trace;
}

std::string emit_trace(const Trace& trace) {
  std::string out;
  for (const auto& f : trace.catalog) {
    if (f.id.empty() || f.id.front() == '#' || f.id.find_first_of(" \t\r\n") != std::string::npos) {
      throw std::invalid_argument("file id '" + f.id + "' cannot be written to a trace");
    }
    out += "file " + f.id + " " + std::to_string(f.size) + " " + format_rational(f.cost) + "\n";
  }
  for (const auto& e : trace.events) {
    if (e.is_request()) {
      out += "req " + trace.catalog[e.file].id + "\n";
    } else {
      out += "tick\n";
    }
  }
  return out;
}

Trace load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_trace(ss.str());
}

void save_trace(const std::string& path, const Trace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write trace '" + path + "'");
  out << emit_trace(trace);
}

}  // namespace cachelab
