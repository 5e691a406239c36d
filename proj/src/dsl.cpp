#include "chroma/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace chroma {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End } kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip();
      if (pos_ >= s_.size()) {
        out.push_back({Token::Kind::End, "", line_, col_});
        return out;
      }
      int l = line_, c = col_;
      char ch = s_[pos_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) advance();
        out.push_back({Token::Kind::Ident, std::string(s_.substr(b, pos_ - b)), l, c});
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '.') {
        if (ch == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
          advance();
          advance();
          out.push_back({Token::Kind::Punct, "->", l, c});
          continue;
        }
        std::size_t b = pos_;
        advance();
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                    ((s_[pos_] == '-' || s_[pos_] == '+') && (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
          advance();
        out.push_back({Token::Kind::Number, std::string(s_.substr(b, pos_ - b)), l, c});
      } else if (std::string_view("{};:[],").find(ch) != std::string_view::npos) {
        advance();
        out.push_back({Token::Kind::Punct, std::string(1, ch), l, c});
      } else {
        throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
      }
    }
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        advance();
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Diagram run() {
    expect_word("diagram");
    const Token& ft = next();
    Flavour f;
    try {
      f = parse_flavour(ft.text);
    } catch (const std::invalid_argument&) {
      throw ParseError(ft.line, ft.column, "unknown flavour '" + ft.text + "'");
    }
    expect("{");
    std::vector<std::string> inputs, outputs;
    struct NodeDecl {
      std::string name;
      Node node;
      const Token* where;
    };
    std::vector<NodeDecl> nodes;
    struct WireDecl {
      std::string from, to;
      Decoration deco;
      const Token* where;
    };
    std::vector<WireDecl> wires;
    while (!peek_is("}")) {
      const Token& kw = next();
      if (kw.kind != Token::Kind::Ident) throw ParseError(kw.line, kw.column, "expected declaration");
      if (kw.text == "inputs" || kw.text == "outputs") {
        auto& list = kw.text == "inputs" ? inputs : outputs;
        while (!peek_is(";")) {
          if (peek_is(",")) {
            next();
            continue;
          }
          list.push_back(ident("port name"));
        }
        expect(";");
      } else if (kw.text == "node") {
        NodeDecl nd;
        nd.where = &kw;
        nd.name = ident("node name");
        expect(":");
        const Token& ct = next();
        if (ct.text == "point") {
          nd.node.kind = NodeKind::Point;
        } else {
          try {
            nd.node.colour = parse_colour(ct.text);
          } catch (const std::invalid_argument&) {
            throw ParseError(ct.line, ct.column, "unknown colour '" + ct.text + "'");
          }
          nd.node.phase = phase();
        }
        expect(";");
        nodes.push_back(nd);
      } else if (kw.text == "wire") {
        WireDecl w;
        w.where = &kw;
        w.from = ident("endpoint");
        expect("->");
        w.to = ident("endpoint");
        w.deco = Decoration::Plain;
        if (peek_is("[")) {
          next();
          const Token& dt = next();
          try {
            w.deco = parse_decoration(dt.text);
          } catch (const std::invalid_argument&) {
            throw ParseError(dt.line, dt.column, "unknown decoration '" + dt.text + "'");
          }
          if (w.deco == Decoration::Plain) throw ParseError(dt.line, dt.column, "plain is not a decoration");
          expect("]");
        }
        expect(";");
        wires.push_back(w);
      } else {
        throw ParseError(kw.line, kw.column, "unknown declaration '" + kw.text + "'");
      }
    }
    expect("}");
    const Token& end = next();
    if (end.kind != Token::Kind::End) throw ParseError(end.line, end.column, "trailing input");

    std::map<std::string, Endpoint> names;
    auto declare = [&](const std::string& n, Endpoint e, const Token& where) {
      if (!names.emplace(n, e).second) throw ParseError(where.line, where.column, "duplicate name '" + n + "'");
    };
    for (std::size_t i = 0; i < inputs.size(); ++i) declare(inputs[i], Endpoint::input(static_cast<std::uint32_t>(i)), t_.front());
    for (std::size_t i = 0; i < outputs.size(); ++i) declare(outputs[i], Endpoint::output(static_cast<std::uint32_t>(i)), t_.front());
    // Names n<digits> keep their number; others get fresh ids after the largest such number.
    std::map<std::string, NodeId> ids;
    NodeId fresh = 0;
    std::vector<char> numbered(nodes.size(), 0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i].name;
      if (n.size() > 1 && n[0] == 'n' && n.size() < 10 &&
          std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        NodeId v = static_cast<NodeId>(std::stoul(n.substr(1)));
        ids[n] = v;
        numbered[i] = 1;
        fresh = std::max(fresh, v + 1);
      }
    }
    Diagram d(f, static_cast<std::uint32_t>(inputs.size()), static_cast<std::uint32_t>(outputs.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      Node n = nodes[i].node;
      n.id = numbered[i] ? ids[nodes[i].name] : fresh++;
      declare(nodes[i].name, Endpoint::node(n.id), *nodes[i].where);
      try {
        d.add_node(n);
      } catch (const DiagramError& e) {
        throw ParseError(nodes[i].where->line, nodes[i].where->column, e.what());
      }
    }
    for (const auto& w : wires) {
      auto a = names.find(w.from), b = names.find(w.to);
      if (a == names.end()) throw ParseError(w.where->line, w.where->column, "unknown endpoint '" + w.from + "'");
      if (b == names.end()) throw ParseError(w.where->line, w.where->column, "unknown endpoint '" + w.to + "'");
      d.add_edge(a->second, b->second, w.deco);
    }
    if (auto v = validate(d)) throw ValidationError(v->invariant, v->detail);
    return d;
  }

 private:
  const Token& next() { return t_[i_ < t_.size() - 1 ? i_++ : i_]; }
  const Token& peek() const { return t_[i_]; }
  bool peek_is(const std::string& p) const {
    if (t_[i_].kind == Token::Kind::End) throw ParseError(t_[i_].line, t_[i_].column, "unexpected end of input");
    return t_[i_].kind == Token::Kind::Punct && t_[i_].text == p;
  }
  void expect(const std::string& p) {
    const Token& t = next();
    if (t.kind != Token::Kind::Punct || t.text != p)
      throw ParseError(t.line, t.column, "expected '" + p + "' but found '" + t.text + "'");
  }
  void expect_word(const std::string& w) {
    const Token& t = next();
    if (t.kind != Token::Kind::Ident || t.text != w)
      throw ParseError(t.line, t.column, "expected '" + w + "'");
  }
  std::string ident(const char* what) {
    const Token& t = next();
    if (t.kind != Token::Kind::Ident) throw ParseError(t.line, t.column, std::string("expected ") + what);
    return t.text;
  }
  Phase phase() {
    const Token& t = next();
    if (t.kind == Token::Kind::Ident && t.text == "rad") {
      const Token& v = next();
      if (v.kind != Token::Kind::Number) throw ParseError(v.line, v.column, "expected angle");
      try {
        std::size_t used = 0;
        double a = std::stod(v.text, &used);
        if (used != v.text.size()) throw std::invalid_argument("junk");
        return Phase::radians(a);
      } catch (const std::exception&) {
        throw ParseError(v.line, v.column, "bad angle '" + v.text + "'");
      }
    }
    if (t.kind != Token::Kind::Number) throw ParseError(t.line, t.column, "expected phase");
    int k = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), k);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      throw ParseError(t.line, t.column, "bad phase '" + t.text + "'");
    return Phase::quarter(k);
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
};

}  // namespace

Flavour parse_flavour(std::string_view s) {
  if (s == "rg") return Flavour::RG;
  if (s == "rgplus") return Flavour::RGplus;
  if (s == "rgb") return Flavour::RGB;
  throw std::invalid_argument("unknown flavour " + std::string(s));
}

Colour parse_colour(std::string_view s) {
  if (s == "red") return Colour::Red;
  if (s == "green") return Colour::Green;
  if (s == "blue") return Colour::Blue;
  throw std::invalid_argument("unknown colour " + std::string(s));
}

Decoration parse_decoration(std::string_view s) {
  for (Decoration d : {Decoration::Plain, Decoration::Hadamard, Decoration::ColourCW, Decoration::ColourCCW,
                       Decoration::DualY, Decoration::DualC, Decoration::DualM})
    if (to_string(d) == s) return d;
  throw std::invalid_argument("unknown decoration " + std::string(s));
}

Diagram parse_diagram(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string print_diagram(const Diagram& d) {
  std::ostringstream os;
  os << "diagram " << to_string(d.flavour()) << " {\n";
  if (d.num_inputs()) {
    os << "  inputs";
    for (std::uint32_t i = 0; i < d.num_inputs(); ++i) os << " i" << i;
    os << ";\n";
  }
  if (d.num_outputs()) {
    os << "  outputs";
    for (std::uint32_t i = 0; i < d.num_outputs(); ++i) os << " o" << i;
    os << ";\n";
  }
  for (const auto& n : d.nodes()) {
    os << "  node n" << n.id << ": ";
    if (n.kind == NodeKind::Point)
      os << "point";
    else
      os << to_string(n.colour) << ' ' << n.phase.to_string();
    os << ";\n";
  }
  std::vector<Edge> edges = d.edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    os << "  wire " << e.source.to_string() << " -> " << e.target.to_string();
    if (e.decoration != Decoration::Plain) os << " [" << to_string(e.decoration) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string print_canonical(const Diagram& d) { return print_diagram(canonicalize(d)); }

}  // namespace chroma
