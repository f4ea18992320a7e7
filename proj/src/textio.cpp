#include "afc/textio.hpp"

#include <cctype>
#include <sstream>

namespace afc {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool try_eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void eat(char c) {
    if (!try_eat(c))
      throw ParseError(std::string("expected '") + c + "' in \"" + text_ + "\"");
  }

  bool try_eat_word(const std::string& word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  int64_t eat_int() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected an integer in \"" + text_ + "\"");
    if (digits > 15) throw ParseError("integer literal too long");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  void eat_end() {
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing text in \"" + text_ + "\"");
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

std::vector<int64_t> eat_int_list(Cursor& cur, char open, char close) {
  cur.eat(open);
  std::vector<int64_t> out;
  if (cur.try_eat(close)) return out;
  out.push_back(cur.eat_int());
  while (cur.try_eat(',')) out.push_back(cur.eat_int());
  cur.eat(close);
  return out;
}

}  // namespace

std::string to_string(const AffinePerm& w) {
  std::ostringstream os;
  os << '[';
  const auto& win = w.window();
  for (size_t i = 0; i < win.size(); ++i) {
    if (i) os << ',';
    os << win[i];
  }
  os << ']';
  return os.str();
}

AffinePerm parse_window(const std::string& text) {
  Cursor cur(text);
  auto win = eat_int_list(cur, '[', ']');
  cur.eat_end();
  return AffinePerm::from_window(std::move(win));
}

std::string to_string(const Tabloid& x) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < x.rows().size(); ++i) {
    if (i) os << '|';
    const auto& row = x.rows()[i];
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << row[j];
    }
  }
  os << '}';
  return os.str();
}

Tabloid parse_tabloid(const std::string& text) {
  Cursor cur(text);
  cur.eat('{');
  std::vector<std::vector<int>> rows(1);
  int total = 0;
  while (true) {
    int64_t e = cur.eat_int();
    if (e < 1) throw ParseError("tabloid entries must be positive residues");
    rows.back().push_back(static_cast<int>(e));
    ++total;
    if (cur.try_eat(',')) continue;
    if (cur.try_eat('|')) {
      rows.emplace_back();
      continue;
    }
    cur.eat('}');
    break;
  }
  cur.eat_end();
  return Tabloid::from_rows(total, std::move(rows));
}

std::string to_string(const std::vector<int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::vector<int64_t> parse_int_vector(const std::string& text) {
  Cursor cur(text);
  auto v = eat_int_list(cur, '(', ')');
  cur.eat_end();
  return v;
}

std::string to_string(const AmbcTriple& t) {
  return "(" + to_string(t.P) + "," + to_string(t.Q) + "," + to_string(t.rho) + ")";
}

AmbcTriple parse_triple(const std::string& text) {
  Cursor cur(text);
  cur.eat('(');
  auto eat_tabloid = [&cur]() {
    cur.eat('{');
    std::vector<std::vector<int>> rows(1);
    int total = 0;
    while (true) {
      int64_t e = cur.eat_int();
      if (e < 1) throw ParseError("tabloid entries must be positive residues");
      rows.back().push_back(static_cast<int>(e));
      ++total;
      if (cur.try_eat(',')) continue;
      if (cur.try_eat('|')) {
        rows.emplace_back();
        continue;
      }
      cur.eat('}');
      break;
    }
    return Tabloid::from_rows(total, std::move(rows));
  };
  Tabloid p = eat_tabloid();
  cur.eat(',');
  Tabloid q = eat_tabloid();
  cur.eat(',');
  auto rho = eat_int_list(cur, '(', ')');
  cur.eat(')');
  cur.eat_end();
  return make_triple(std::move(p), std::move(q), std::move(rho));
}

std::string to_string(const ComponentLabel& label) {
  return "w:" + to_string(label.w) + ";c:" + to_string(label.c);
}

ComponentLabel parse_label(const std::string& text, const RectShape& shape) {
  Cursor cur(text);
  cur.try_eat_word("w:");
  auto win = eat_int_list(cur, '[', ']');
  if (!cur.try_eat(';') || !cur.try_eat_word("c:")) {
    // allow "[...]:(...)"
    cur.try_eat(':');
    cur.try_eat_word("c:");
  }
  auto c = eat_int_list(cur, '(', ')');
  cur.eat_end();
  return make_label(shape, AffinePerm::from_window(std::move(win)), std::move(c));
}

std::string to_string(const RectShape& shape) {
  return std::to_string(shape.l) + "x" + std::to_string(shape.m);
}

RectShape parse_shape(const std::string& text) {
  Cursor cur(text);
  int64_t l = cur.eat_int();
  if (!cur.try_eat('x') && !cur.try_eat('X'))
    throw ParseError("shape must look like LxM");
  int64_t m = cur.eat_int();
  cur.eat_end();
  if (l < 1 || m < 1 || l > 64 || m > 64)
    throw ParseError("shape sides out of range");
  return rect_shape(static_cast<int>(l), static_cast<int>(m));
}

}  // namespace afc
