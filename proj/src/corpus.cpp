#include "camina/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace camina {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    syntax_error(line, "expected a decimal integer, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    syntax_error(line, "integer out of range: " + token);
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

FiniteGroup CorpusEntry::build(std::size_t order_cap) const {
  return group_from_generators(degree, generators, order_cap);
}

std::vector<CorpusEntry> parse_corpus(std::istream& in, std::size_t order_cap) {
  std::vector<CorpusEntry> entries;
  std::set<std::pair<std::uint64_t, std::uint64_t>> ids;
  std::optional<CorpusEntry> current;
  std::size_t entry_line = 0;
  bool have_degree = false;
  std::string raw;
  std::size_t line = 0;

  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream tokens(text);
    std::string keyword;
    tokens >> keyword;

    if (keyword == "group") {
      if (current) syntax_error(line, "'group' before 'end' of the previous entry");
      std::string order_tok, index_tok;
      tokens >> order_tok >> index_tok;
      CorpusEntry e;
      e.order = parse_uint(order_tok, line);
      e.index = parse_uint(index_tok, line);
      std::string rest;
      std::getline(tokens, rest);
      e.name = trim(rest);
      if (!ids.emplace(e.order, e.index).second)
        throw Error(ErrorCode::DuplicateId, "line " + std::to_string(line) + ": duplicate id " + e.id());
      current = std::move(e);
      entry_line = line;
      have_degree = false;
    } else if (keyword == "degree") {
      if (!current) syntax_error(line, "'degree' outside a group entry");
      if (have_degree) syntax_error(line, "repeated 'degree'");
      std::string tok, extra;
      tokens >> tok;
      if (tokens >> extra) syntax_error(line, "trailing tokens after degree");
      current->degree = parse_uint(tok, line);
      have_degree = true;
    } else if (keyword == "gen") {
      if (!current) syntax_error(line, "'gen' outside a group entry");
      if (!have_degree) syntax_error(line, "'gen' before 'degree'");
      std::vector<std::uint32_t> images;
      std::string tok;
      while (tokens >> tok) images.push_back(static_cast<std::uint32_t>(parse_uint(tok, line)));
      if (images.size() != current->degree)
        syntax_error(line, "expected " + std::to_string(current->degree) + " images, got " + std::to_string(images.size()));
      try {
        current->generators.emplace_back(std::move(images));
      } catch (const Error& err) {
        throw Error(err.code(), "line " + std::to_string(line) + ": " + err.what());
      }
    } else if (keyword == "end") {
      if (!current) syntax_error(line, "'end' outside a group entry");
      if (!have_degree) syntax_error(line, "entry has no 'degree' line");
      const auto g = current->build(order_cap);
      if (g.order() != current->order) {
        std::ostringstream msg;
        msg << "entry " << current->id() << " (line " << entry_line << ") declares order " << current->order
            << " but its generators close to order " << g.order();
        throw Error(ErrorCode::OrderMismatch, msg.str());
      }
      entries.push_back(std::move(*current));
      current.reset();
    } else {
      syntax_error(line, "unknown keyword '" + keyword + "'");
    }
  }
  if (current) syntax_error(line, "missing 'end' for entry starting at line " + std::to_string(entry_line));
  return entries;
}

std::vector<CorpusEntry> parse_corpus_file(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return parse_corpus(in, order_cap);
}

void write_corpus_entry(std::ostream& out, const CorpusEntry& e) {
  out << "group " << e.order << ' ' << e.index << ' ' << e.name << '\n';
  out << "degree " << e.degree << '\n';
  for (const auto& g : e.generators) {
    out << "gen";
    for (auto im : g.images()) out << ' ' << im;
    out << '\n';
  }
  out << "end\n";
}

CorpusEntry corpus_entry_from_group(const FiniteGroup& g, std::uint64_t index, std::string name) {
  CorpusEntry e;
  e.order = g.order();
  e.index = index;
  e.name = std::move(name);
  e.degree = g.order();
  e.generators = regular_representation(g);
  return e;
}

}  // namespace camina
