#include "widthlab/seqlab.hpp"
#include "widthlab/spectra.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

namespace widthlab::seqlab {

ParseError::ParseError(std::size_t position, const std::string& message)
    : InputError("model parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SequenceModel parse() {
    SequenceModel m = model();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a model name");
    return std::string(text_.substr(start, pos_ - start));
  }

  double number() {
    skip_space();
    const std::string rest(text_.substr(pos_));
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number");
    if (errno == ERANGE || !std::isfinite(v)) fail("number out of range");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  std::size_t count() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t k = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (k > 1'000'000'000) fail("shift too large");
      k = 10 * k + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a nonnegative integer shift");
    return k;
  }

  // Parameter checks reported at the position of the argument.
  template <class F>
  SequenceModel build(std::size_t at, F&& make) {
    try {
      return make();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(at, e.what());
    }
  }

  SequenceModel model() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    expect('(');
    if (name == "geom" || name == "pow" || name == "supergeom") {
      const std::size_t at = (skip_space(), pos_);
      const double v = number();
      expect(')');
      return build(at, [&] {
        if (name == "geom") return SequenceModel::geometric(v);
        if (name == "pow") return SequenceModel::power(v);
        return SequenceModel::super_geometric(v);
      });
    }
    if (name == "shift") {
      const std::size_t k = count();
      expect(',');
      SequenceModel inner = model();
      expect(')');
      return SequenceModel::shifted(k, std::move(inner));
    }
    if (name == "scale") {
      const std::size_t at = (skip_space(), pos_);
      const double c = number();
      expect(',');
      SequenceModel inner = model();
      expect(')');
      return build(at, [&] { return SequenceModel::scaled(c, std::move(inner)); });
    }
    if (name == "samples") {
      const std::size_t at = (skip_space(), pos_);
      std::vector<double> values{number()};
      while (accept(',')) values.push_back(number());
      expect(')');
      return build(at, [&] { return SequenceModel::samples(std::move(values)); });
    }
    if (name == "spectrum") {
      skip_space();
      const std::size_t at = pos_;
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("expected ')' after file name");
      std::string path(text_.substr(pos_, close - pos_));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) fail("expected a file name");
      pos_ = close + 1;
      return build(at, [&] {
        const spectra::SingularSpectrum sp = spectra::singular_spectrum(read_matrix_file(path));
        if (sp.rank == 0) throw InputError("spectrum(" + path + "): matrix has no nonzero singular values");
        return SequenceModel::samples(std::vector<double>(sp.values.begin(),
                                                          sp.values.begin() + static_cast<std::ptrdiff_t>(sp.rank)));
      });
    }
    pos_ = start;
    fail("unknown model '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SequenceModel parse_model(std::string_view text) { return Parser(text).parse(); }

}  // namespace widthlab::seqlab
