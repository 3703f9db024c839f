#include "pbz/io.hpp"

#include <cctype>     // for isspace
#include <fstream>    // for ifstream, ofstream
#include <map>        // for map
#include <optional>   // for optional
#include <sstream>    // for istringstream, ostringstream

namespace pbz {

  namespace {
    std::vector<std::string> split_ws(std::string const& s) {
      std::istringstream       in(s);
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    bool writable_label(std::string const& s) {
      if (s.empty() || s == "<") {
        return false;
      }
      for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ':'
            || c == ';' || c == '#') {
          return false;
        }
      }
      return true;
    }

    struct Document {
      std::size_t                                  line = 0;
      std::string                                  name;
      std::optional<std::vector<std::string>>      elements;
      std::vector<std::pair<std::string, std::string>> covers;
      std::vector<std::pair<std::string, std::string>> kleene, brouwer;
      std::size_t kleene_line = 0, brouwer_line = 0, covers_line = 0;
      std::optional<std::pair<std::string, std::string>> bounds;
      std::size_t                                        bounds_line = 0;
    };

    AlgebraData finish(Document const& d) {
      if (!d.elements) {
        throw FormatError(d.line, "algebra '" + d.name
                                      + "' has no elements line");
      }
      AlgebraData raw;
      raw.name   = d.name;
      raw.labels = *d.elements;
      std::size_t const              n = raw.labels.size();
      std::map<std::string, Element> index;
      for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(raw.labels[i], static_cast<Element>(i)).second) {
          throw FormatError(d.line, "duplicate element '" + raw.labels[i]
                                        + "'");
        }
      }
      auto lookup = [&](std::string const& s, std::size_t line) {
        auto it = index.find(s);
        if (it == index.end()) {
          throw FormatError(line, "unknown element '" + s + "'");
        }
        return it->second;
      };

      raw.leq.assign(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        raw.leq[i][i] = true;
      }
      for (auto const& [a, b] : d.covers) {
        raw.leq[lookup(a, d.covers_line)][lookup(b, d.covers_line)] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if (!raw.leq[i][k]) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            if (raw.leq[k][j]) {
              raw.leq[i][j] = true;
            }
          }
        }
      }

      auto map = [&](auto const& pairs, std::size_t line, char const* what) {
        if (line == 0) {
          throw FormatError(d.line, std::string("algebra '") + d.name
                                        + "' has no " + what + " line");
        }
        std::vector<Element> m(n);
        std::vector<bool>    set(n, false);
        for (auto const& [a, b] : pairs) {
          Element const x = lookup(a, line);
          if (set[x]) {
            throw FormatError(line, std::string(what) + " assigns '" + a
                                        + "' twice");
          }
          set[x] = true;
          m[x]   = lookup(b, line);
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (!set[i]) {
            throw FormatError(line, std::string(what) + " is undefined at '"
                                        + raw.labels[i] + "'");
          }
        }
        return m;
      };
      raw.kleene  = map(d.kleene, d.kleene_line, "kleene");
      raw.brouwer = map(d.brouwer, d.brouwer_line, "brouwer");

      // Least and greatest elements of the order; the validator reports a
      // missing bound.
      for (std::size_t i = 0; i < n; ++i) {
        bool least = true, greatest = true;
        for (std::size_t j = 0; j < n; ++j) {
          least    = least && raw.leq[i][j];
          greatest = greatest && raw.leq[j][i];
        }
        if (least) {
          raw.zero = static_cast<Element>(i);
        }
        if (greatest) {
          raw.one = static_cast<Element>(i);
        }
      }
      if (d.bounds) {
        raw.zero = lookup(d.bounds->first, d.bounds_line);
        raw.one  = lookup(d.bounds->second, d.bounds_line);
      }
      return raw;
    }

    void parse_pairs(std::vector<std::string> const& toks, std::size_t line,
                     std::vector<std::pair<std::string, std::string>>& out) {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto const pos = toks[i].find(':');
        if (pos == std::string::npos || pos == 0
            || pos + 1 == toks[i].size()
            || toks[i].find(':', pos + 1) != std::string::npos) {
          throw FormatError(line, "expected <a>:<b>, found '" + toks[i]
                                      + "'");
        }
        out.emplace_back(toks[i].substr(0, pos), toks[i].substr(pos + 1));
      }
    }
  }  // namespace

  std::vector<AlgebraData> parse_algebra_data(std::string const& text) {
    std::vector<AlgebraData> result;
    std::optional<Document>  doc;
    std::istringstream       in(text);
    std::string              raw_line;
    std::size_t              line = 0;

    while (std::getline(in, raw_line)) {
      ++line;
      if (auto hash = raw_line.find('#'); hash != std::string::npos) {
        raw_line.erase(hash);
      }
      auto toks = split_ws(raw_line);
      if (toks.empty()) {
        continue;
      }
      auto const& key = toks[0];
      if (key == "algebra") {
        if (toks.size() != 2) {
          throw FormatError(line, "expected 'algebra <name>'");
        }
        if (doc) {
          result.push_back(finish(*doc));
        }
        doc.emplace();
        doc->line = line;
        doc->name = toks[1];
        continue;
      }
      if (!doc) {
        throw FormatError(line, "expected 'algebra <name>' before '" + key
                                    + "'");
      }
      if (key == "elements") {
        if (doc->elements) {
          throw FormatError(line, "second elements line");
        }
        doc->elements.emplace(toks.begin() + 1, toks.end());
      } else if (key == "covers") {
        doc->covers_line = line;
        std::string rest = raw_line.substr(raw_line.find("covers") + 6);
        std::istringstream parts(rest);
        std::string        part;
        while (std::getline(parts, part, ';')) {
          auto p = split_ws(part);
          if (p.empty()) {
            continue;
          }
          if (p.size() != 3 || p[1] != "<") {
            throw FormatError(line, "expected '<a> < <b>' in covers");
          }
          doc->covers.emplace_back(p[0], p[2]);
        }
      } else if (key == "kleene") {
        doc->kleene_line = line;
        parse_pairs(toks, line, doc->kleene);
      } else if (key == "brouwer") {
        doc->brouwer_line = line;
        parse_pairs(toks, line, doc->brouwer);
      } else if (key == "bounds") {
        if (toks.size() != 3) {
          throw FormatError(line, "expected 'bounds <zero> <one>'");
        }
        doc->bounds.emplace(toks[1], toks[2]);
        doc->bounds_line = line;
      } else {
        throw FormatError(line, "unknown keyword '" + key + "'");
      }
    }
    if (doc) {
      result.push_back(finish(*doc));
    }
    return result;
  }

  std::vector<FiniteAlgebra> parse_algebras(std::string const& text) {
    std::vector<FiniteAlgebra> result;
    for (auto const& raw : parse_algebra_data(text)) {
      result.push_back(FiniteAlgebra::from_data(raw));
    }
    return result;
  }

  FiniteAlgebra parse_algebra(std::string const& text) {
    auto all = parse_algebras(text);
    if (all.size() != 1) {
      throw FormatError(0, "expected exactly one algebra, found "
                               + std::to_string(all.size()));
    }
    return std::move(all.front());
  }

  std::string print_algebra(FiniteAlgebra const& A) {
    if (!writable_label(A.name())) {
      throw MalformedInput("algebra name '" + A.name()
                           + "' cannot be written");
    }
    for (auto const& s : A.labels()) {
      if (!writable_label(s)) {
        throw MalformedInput("label '" + s + "' cannot be written");
      }
    }
    std::ostringstream out;
    out << "algebra " << A.name() << "\nelements";
    for (auto const& s : A.labels()) {
      out << ' ' << s;
    }
    out << "\ncovers";
    auto const covers = A.lattice().covers();
    for (std::size_t i = 0; i < covers.size(); ++i) {
      out << (i ? " ; " : " ") << A.label(covers[i].first) << " < "
          << A.label(covers[i].second);
    }
    out << "\nkleene";
    for (Element a = 0; a < A.size(); ++a) {
      out << ' ' << A.label(a) << ':' << A.label(A.kleene(a));
    }
    out << "\nbrouwer";
    for (Element a = 0; a < A.size(); ++a) {
      out << ' ' << A.label(a) << ':' << A.label(A.brouwer(a));
    }
    out << "\nbounds " << A.label(A.zero()) << ' ' << A.label(A.one())
        << '\n';
    return out.str();
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + path);
    }
    out << text;
  }

  namespace {
    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }

    std::string dot_quote(std::string const& s) {
      return '"' + dot_escape(s) + '"';
    }
  }  // namespace

  std::string to_dot(FiniteAlgebra const& A) {
    std::ostringstream out;
    out << "digraph " << dot_quote(A.name()) << " {\n"
        << "  rankdir=BT;\n"
        << "  node [shape=box];\n";
    for (Element a = 0; a < A.size(); ++a) {
      out << "  n" << a << " [label=\"" << dot_escape(A.label(a)) << "\\n~ "
          << dot_escape(A.label(A.brouwer(a))) << "\"];\n";
    }
    for (auto const& [lo, hi] : A.lattice().covers()) {
      out << "  n" << lo << " -> n" << hi << " [dir=none];\n";
    }
    for (Element a = 0; a < A.size(); ++a) {
      Element const b = A.kleene(a);
      if (a <= b) {
        out << "  n" << a << " -> n" << b
            << " [dir=none, style=dashed, constraint=false];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace pbz
