#pragma once

// Small arithmetic interpreter used to re-evaluate echoed formula strings.
// Grammar: expr = term {(+|-) term}; term = unary {(*|/) unary};
// unary = -unary | power; power = primary [^ unary]; primary = number | name |
// name(expr) | (expr). Functions: log, exp, sqrt.

#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace testing_support {

class FormulaEvaluator {
public:
  FormulaEvaluator(std::string text, std::map<std::string, long double> vars)
      : text_(std::move(text)), vars_(std::move(vars)) {}

  long double evaluate() {
    pos_ = 0;
    const long double v = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::runtime_error("formula '" + text_ + "' at " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long double expr() {
    long double v = term();
    while (true) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  long double term() {
    long double v = unary();
    while (true) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }

  long double unary() {
    if (eat('-')) return -unary();
    return power();
  }

  long double power() {
    const long double base = primary();
    if (eat('^')) return std::pow(base, unary());
    return base;
  }

  long double primary() {
    skip();
    if (eat('(')) {
      const long double v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      std::size_t used = 0;
      const long double v = std::stold(text_.substr(pos_), &used);
      pos_ += used;
      return v;
    }
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    if (name.empty()) fail("expected a value");
    if (eat('(')) {
      const long double arg = expr();
      if (!eat(')')) fail("expected ')' after argument");
      if (name == "log") return std::log(arg);
      if (name == "exp") return std::exp(arg);
      if (name == "sqrt") return std::sqrt(arg);
      fail("unknown function " + name);
    }
    const auto it = vars_.find(name);
    if (it == vars_.end()) fail("unknown variable " + name);
    return it->second;
  }

  std::string text_;
  std::map<std::string, long double> vars_;
  std::size_t pos_ = 0;
};

inline long double evaluate_formula(const std::string& text,
                                    const std::map<std::string, long double>& vars) {
  return FormulaEvaluator(text, vars).evaluate();
}

}  // namespace testing_support
