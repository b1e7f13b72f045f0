#pragma once

#include <cctype>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jacobian.hpp"
#include "oracle.hpp"

namespace miura {

// Script language of the command-line tool.  One statement per line,
// '#' starts a comment:
//
//   stmt := "ring" ("q" | "gf" INT) "vars" (IDENT ":" INT)+
//         | "curve" poly (";" poly)*
//         | "let" IDENT "=" expr
//         | "print" expr | "assert" expr "==" expr | "quit"
//   expr := "point" "(" scalar ("," scalar)* ")" | "ideal" "(" poly ("," poly)* ")"
//         | "unit" | IDENT | "add" "(" expr "," expr ")" | "double" "(" expr ")"
//         | "inv" "(" expr ")" | "reduce" "(" expr ")" | "multi" "(" expr "," INT ")"
//         | expr "*" expr | "degree" "(" expr ")"

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct PointExpr {
  std::vector<std::string> scalars;
};
struct IdealExpr {
  std::vector<std::string> polys;
};
struct UnitExpr {};
struct NameExpr {
  std::string name;
};
enum class BuiltinFn { add, double_fn, inv, reduce, multi, degree };
struct CallExpr {
  BuiltinFn fn;
  std::vector<ExprPtr> args;
  long long multiplier = 0;
};
struct ProductExpr {
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<PointExpr, IdealExpr, UnitExpr, NameExpr, CallExpr, ProductExpr> node;
  std::size_t line = 0;
  std::size_t col = 0;
};

struct RingDecl {
  bool rationals = false;
  std::uint64_t p = 0;
  std::vector<std::pair<std::string, std::uint64_t>> vars;
};
struct CurveDecl {
  std::vector<std::string> polys;
};
struct LetStmt {
  std::string name;
  ExprPtr expr;
};
struct PrintStmt {
  ExprPtr expr;
};
struct AssertStmt {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct QuitStmt {};

struct Statement {
  std::variant<RingDecl, CurveDecl, LetStmt, PrintStmt, AssertStmt, QuitStmt> node;
  std::size_t line = 0;
};

namespace detail {

// line tokenizer; polynomial and scalar fragments are captured as raw text
class LineParser {
public:
  LineParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size() || text_[pos_] == '#';
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw Error(Errc::SyntaxError, "expected " + expected, line_, pos_ + 1);
  }

  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  bool peek_symbol(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept_symbol(char c) {
    if (!peek_symbol(c)) return false;
    ++pos_;
    return true;
  }

  void expect_symbol(char c) {
    if (!accept_symbol(c)) fail(std::string("'") + c + "'");
  }

  std::optional<std::string> try_ident() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    if (!std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '_')
      return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string expect_ident(const std::string& what) {
    auto id = try_ident();
    if (!id) fail(what);
    return *id;
  }

  long long expect_int() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("an integer");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  // raw fragment up to one of the delimiters (at top level; polynomials and
  // scalars contain no parentheses)
  std::string fragment_until(std::string_view delims) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && delims.find(text_[pos_]) == std::string_view::npos &&
           text_[pos_] != '#')
      ++pos_;
    std::string out(text_.substr(start, pos_ - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("a polynomial or scalar");
    return out;
  }

  std::size_t fragment_start() {
    skip_ws();
    return pos_;
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline ExprPtr parse_expr(LineParser& p);

inline ExprPtr parse_primary(LineParser& p) {
  auto expr = std::make_shared<Expr>();
  expr->line = p.line();
  expr->col = p.column();
  auto ident = p.try_ident();
  if (!ident) p.fail("an expression");
  const std::string& kw = *ident;
  if (kw == "point") {
    PointExpr node;
    p.expect_symbol('(');
    node.scalars.push_back(p.fragment_until(",)"));
    while (p.accept_symbol(',')) node.scalars.push_back(p.fragment_until(",)"));
    p.expect_symbol(')');
    expr->node = std::move(node);
  } else if (kw == "ideal") {
    IdealExpr node;
    p.expect_symbol('(');
    node.polys.push_back(p.fragment_until(",)"));
    while (p.accept_symbol(',')) node.polys.push_back(p.fragment_until(",)"));
    p.expect_symbol(')');
    expr->node = std::move(node);
  } else if (kw == "unit") {
    expr->node = UnitExpr{};
  } else if (kw == "add" || kw == "double" || kw == "inv" || kw == "reduce" || kw == "multi" ||
             kw == "degree") {
    CallExpr node;
    p.expect_symbol('(');
    node.args.push_back(parse_expr(p));
    if (kw == "add") {
      node.fn = BuiltinFn::add;
      p.expect_symbol(',');
      node.args.push_back(parse_expr(p));
    } else if (kw == "multi") {
      node.fn = BuiltinFn::multi;
      p.expect_symbol(',');
      node.multiplier = p.expect_int();
    } else if (kw == "double") {
      node.fn = BuiltinFn::double_fn;
    } else if (kw == "inv") {
      node.fn = BuiltinFn::inv;
    } else if (kw == "reduce") {
      node.fn = BuiltinFn::reduce;
    } else {
      node.fn = BuiltinFn::degree;
    }
    p.expect_symbol(')');
    expr->node = std::move(node);
  } else {
    expr->node = NameExpr{kw};
  }
  return expr;
}

inline ExprPtr parse_expr(LineParser& p) {
  ExprPtr lhs = parse_primary(p);
  while (p.peek_symbol('*')) {
    p.accept_symbol('*');
    auto prod = std::make_shared<Expr>();
    prod->line = lhs->line;
    prod->col = lhs->col;
    ExprPtr rhs = parse_primary(p);
    prod->node = ProductExpr{std::move(lhs), std::move(rhs)};
    lhs = std::move(prod);
  }
  return lhs;
}

inline std::optional<Statement> parse_statement_line(std::string_view text, std::size_t line) {
  LineParser p(text, line);
  if (p.at_end()) return std::nullopt;
  Statement stmt;
  stmt.line = line;
  std::string kw = p.expect_ident("a statement keyword");
  if (kw == "ring") {
    RingDecl decl;
    std::string field = p.expect_ident("'q' or 'gf'");
    if (field == "q") {
      decl.rationals = true;
    } else if (field == "gf") {
      long long v = p.expect_int();
      if (v < 2) p.fail("a prime modulus");
      decl.p = static_cast<std::uint64_t>(v);
    } else {
      p.fail("'q' or 'gf'");
    }
    std::string vars_kw = p.expect_ident("'vars'");
    if (vars_kw != "vars") p.fail("'vars'");
    while (!p.at_end()) {
      std::string name = p.expect_ident("a variable name");
      p.expect_symbol(':');
      long long w = p.expect_int();
      if (w <= 0) p.fail("a positive weight");
      decl.vars.emplace_back(std::move(name), static_cast<std::uint64_t>(w));
    }
    if (decl.vars.empty()) p.fail("at least one variable");
    stmt.node = std::move(decl);
  } else if (kw == "curve") {
    CurveDecl decl;
    decl.polys.push_back(p.fragment_until(";"));
    while (p.accept_symbol(';')) decl.polys.push_back(p.fragment_until(";"));
    stmt.node = std::move(decl);
  } else if (kw == "let") {
    LetStmt decl;
    decl.name = p.expect_ident("a name");
    p.expect_symbol('=');
    decl.expr = parse_expr(p);
    stmt.node = std::move(decl);
  } else if (kw == "print") {
    stmt.node = PrintStmt{parse_expr(p)};
  } else if (kw == "assert") {
    AssertStmt decl;
    decl.lhs = parse_expr(p);
    p.expect_symbol('=');
    p.expect_symbol('=');
    decl.rhs = parse_expr(p);
    stmt.node = std::move(decl);
  } else if (kw == "quit") {
    stmt.node = QuitStmt{};
  } else {
    throw Error(Errc::SyntaxError, "unknown statement '" + kw + "'", line, 1);
  }
  if (!p.at_end()) p.fail("end of line");
  return stmt;
}

}  // namespace detail

inline std::vector<Statement> parse_script(std::string_view text) {
  std::vector<Statement> out;
  std::size_t line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line_text =
        end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
    if (auto stmt = detail::parse_statement_line(line_text, line)) out.push_back(std::move(*stmt));
    if (end == std::string_view::npos) break;
    start = end + 1;
    ++line;
  }
  return out;
}

// "ideal 1" for the unit class, "ideal 0" for the zero ideal, otherwise the
// quotient generators, monic and ascending by leading monomial.
inline std::string format_ideal(const IdealHandle& I) {
  if (I.is_unit_class()) return "ideal 1";
  auto gens = I.quotient_generators();
  if (gens.empty()) return "ideal 0";
  std::string out = "ideal (";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += format_poly(gens[i]);
  }
  out += ")";
  return out;
}

enum class OutputFormat { text, json };

// Sequential evaluator with an environment of named ideals.  Owns the
// declared ring/curve state; statements stream rendered results to `out`.
class Interpreter {
public:
  explicit Interpreter(std::ostream& out, OutputFormat format = OutputFormat::text)
      : out_(out), format_(format) {}

  using Value = std::variant<IdealHandle, long long>;

  bool finished() const noexcept { return finished_; }
  bool any_assert_failed() const noexcept { return assert_failed_; }

  void execute(const Statement& stmt) {
    std::visit([&](const auto& node) { run(node, stmt.line); }, stmt.node);
  }

  void run_all(const std::vector<Statement>& script) {
    for (const auto& stmt : script) {
      if (finished_) break;
      execute(stmt);
    }
  }

private:
  void run(const RingDecl& decl, std::size_t) {
    pending_ring_ = decl;
    curve_.reset();
    env_.clear();
  }

  void run(const CurveDecl& decl, std::size_t line) {
    if (!pending_ring_)
      throw Error(Errc::EvalError, "'curve' before 'ring'", line, 1);
    FieldSpec field =
        pending_ring_->rationals ? FieldSpec::rationals() : FieldSpec::prime(pending_ring_->p);
    std::vector<std::string> names;
    std::vector<std::uint64_t> weights;
    for (const auto& [n, w] : pending_ring_->vars) {
      names.push_back(n);
      weights.push_back(w);
    }
    RingPtr ring = make_ring(field, names, weights);
    std::vector<Polynomial> gens;
    gens.reserve(decl.polys.size());
    for (const auto& text : decl.polys) gens.push_back(parse_poly(text, ring, line));
    curve_ = make_curve(field, names, weights, std::move(gens));
    env_.clear();
  }

  void run(const LetStmt& stmt, std::size_t) { env_.insert_or_assign(stmt.name, eval(*stmt.expr)); }

  void run(const PrintStmt& stmt, std::size_t) {
    Value v = eval(*stmt.expr);
    if (format_ == OutputFormat::text) {
      out_ << render(v) << "\n";
      return;
    }
    if (std::holds_alternative<long long>(v)) {
      out_ << "{\"value\": " << std::get<long long>(v) << "}\n";
      return;
    }
    const auto& ideal = std::get<IdealHandle>(v);
    out_ << "{\"generators\": [";
    auto gens = ideal.quotient_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) out_ << ", ";
      out_ << '"' << format_poly(gens[i]) << '"';
    }
    out_ << "], \"curve\": \"" << curve_text() << "\", \"field\": \""
         << curve_->ring->field.to_string() << "\"}\n";
  }

  void run(const AssertStmt& stmt, std::size_t line) {
    Value lhs = eval(*stmt.lhs);
    Value rhs = eval(*stmt.rhs);
    bool ok = false;
    if (std::holds_alternative<long long>(lhs) && std::holds_alternative<long long>(rhs)) {
      ok = std::get<long long>(lhs) == std::get<long long>(rhs);
    } else if (std::holds_alternative<IdealHandle>(lhs) &&
               std::holds_alternative<IdealHandle>(rhs)) {
      const auto& a = std::get<IdealHandle>(lhs);
      const auto& b = std::get<IdealHandle>(rhs);
      require_same_curve(a, b);
      ok = ideal_equal(a.preimage(), b.preimage());
    } else {
      throw Error(Errc::EvalError, "cannot compare an ideal with an integer", line, 1);
    }
    if (!ok) assert_failed_ = true;
    if (format_ == OutputFormat::text) {
      if (ok)
        out_ << "assert ok\n";
      else
        out_ << "assert FAILED: " << render(lhs) << " != " << render(rhs) << "\n";
    } else {
      out_ << "{\"assert\": " << (ok ? "true" : "false") << "}\n";
    }
  }

  void run(const QuitStmt&, std::size_t) { finished_ = true; }

  std::string curve_text() const {
    std::string out;
    for (std::size_t i = 0; i < curve_->gens.size(); ++i) {
      if (i) out += "; ";
      out += format_poly(curve_->gens[i]);
    }
    return out;
  }

  std::string render(const Value& v) const {
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    return format_ideal(std::get<IdealHandle>(v));
  }

  const CurvePtr& require_curve(std::size_t line, std::size_t col) const {
    if (!curve_) throw Error(Errc::EvalError, "no curve declared", line, col);
    return curve_;
  }

  IdealHandle as_ideal(Value v, const Expr& at) const {
    if (!std::holds_alternative<IdealHandle>(v))
      throw Error(Errc::EvalError, "expected an ideal value", at.line, at.col);
    return std::get<IdealHandle>(std::move(v));
  }

  Value eval(const Expr& e) {
    return std::visit([&](const auto& node) -> Value { return eval_node(node, e); }, e.node);
  }

  Value eval_node(const PointExpr& node, const Expr& e) {
    const CurvePtr& curve = require_curve(e.line, e.col);
    std::vector<FieldValue> coords;
    coords.reserve(node.scalars.size());
    for (const auto& s : node.scalars) coords.push_back(parse_scalar(s, curve->ring->field));
    return point_ideal(curve, coords);
  }

  Value eval_node(const IdealExpr& node, const Expr& e) {
    const CurvePtr& curve = require_curve(e.line, e.col);
    std::vector<Polynomial> gens;
    gens.reserve(node.polys.size());
    for (const auto& text : node.polys) gens.push_back(parse_poly(text, curve->ring, e.line));
    return IdealHandle(curve, std::move(gens));
  }

  Value eval_node(const UnitExpr&, const Expr& e) {
    return IdealHandle::unit(require_curve(e.line, e.col));
  }

  Value eval_node(const NameExpr& node, const Expr& e) {
    auto it = env_.find(node.name);
    if (it == env_.end())
      throw Error(Errc::NameError, "undefined name '" + node.name + "'", e.line, e.col);
    return it->second;
  }

  Value eval_node(const CallExpr& node, const Expr& e) {
    switch (node.fn) {
      case BuiltinFn::add:
        return add(as_ideal(eval(*node.args[0]), e), as_ideal(eval(*node.args[1]), e));
      case BuiltinFn::double_fn:
        return double_class(as_ideal(eval(*node.args[0]), e));
      case BuiltinFn::inv:
        return inv(as_ideal(eval(*node.args[0]), e));
      case BuiltinFn::reduce:
        return reduce_class(as_ideal(eval(*node.args[0]), e));
      case BuiltinFn::multi:
        return multi(as_ideal(eval(*node.args[0]), e), node.multiplier);
      case BuiltinFn::degree:
        return static_cast<long long>(ideal_degree(as_ideal(eval(*node.args[0]), e)));
    }
    throw Error(Errc::InternalError, "unhandled builtin");
  }

  Value eval_node(const ProductExpr& node, const Expr& e) {
    return ideal_product(as_ideal(eval(*node.lhs), e), as_ideal(eval(*node.rhs), e));
  }

  std::ostream& out_;
  OutputFormat format_;
  std::optional<RingDecl> pending_ring_;
  CurvePtr curve_;
  std::map<std::string, Value> env_;
  bool finished_ = false;
  bool assert_failed_ = false;
};

// Batch entry point: 0 on success, 1 if an assertion failed, 2 on parse or
// evaluation errors.
inline int run_script_text(std::string_view text, std::ostream& out,
                           OutputFormat format = OutputFormat::text,
                           std::ostream* err = nullptr) {
  try {
    auto script = parse_script(text);
    Interpreter interp(out, format);
    interp.run_all(script);
    return interp.any_assert_failed() ? 1 : 0;
  } catch (const Error& e) {
    if (err) {
      *err << "error";
      if (e.line()) *err << " (line " << e.line() << ", col " << e.column() << ")";
      *err << ": " << e.what() << "\n";
    }
    return 2;
  }
}

}  // namespace miura
