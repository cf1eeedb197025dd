#include "apostol/render.hpp"

#include <json.hpp>

#include <sstream>

namespace apostol {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

// One term of a rendered polynomial, sign handled by the caller.
std::string text_term(const Rational& magnitude, int power) {
  std::string var;
  if (power == 1) var = "x";
  else if (power > 1) var = "x^" + std::to_string(power);
  if (power == 0) return to_string(magnitude);
  if (magnitude == 1) return var;
  if (is_integer(magnitude)) return to_string(magnitude) + var;
  return "(" + to_string(magnitude) + ")" + var;
}

std::string latex_term(const Rational& magnitude, int power) {
  std::string var;
  if (power == 1) var = "x";
  else if (power > 1) var = "x^{" + std::to_string(power) + "}";
  if (power == 0) return rational_latex(magnitude);
  if (magnitude == 1) return var;
  return rational_latex(magnitude) + var;
}

template <typename TermFn>
std::string poly_descending(const Poly& q, TermFn term) {
  if (q.is_zero()) return "0";
  std::string out;
  for (int i = q.degree(); i >= 0; --i) {
    const Rational& c = q.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term(magnitude, i);
  }
  return out;
}

ordered_json value_json(const CheckValue& v) {
  if (std::holds_alternative<Rational>(v)) return to_string(std::get<Rational>(v));
  ordered_json arr = ordered_json::array();
  for (const Rational& c : std::get<Poly>(v).coeffs()) arr.push_back(to_string(c));
  return arr;
}

std::string value_text(const CheckValue& v) {
  if (std::holds_alternative<Rational>(v)) return to_string(std::get<Rational>(v));
  return poly_text(std::get<Poly>(v));
}

std::string value_latex(const CheckValue& v) {
  if (std::holds_alternative<Rational>(v)) return rational_latex(std::get<Rational>(v));
  return poly_latex(std::get<Poly>(v));
}

std::string instance_text(const CheckReport& r, char joiner) {
  std::string out;
  for (size_t i = 0; i < r.instance.size(); ++i) {
    if (i) out += joiner;
    out += r.instance[i].first + "=" + r.instance[i].second;
  }
  return out;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "latex") return OutputFormat::Latex;
  throw std::invalid_argument("unknown format \"" + std::string(name) +
                              "\" (expected text, json, csv or latex)");
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Latex: return "latex";
  }
  return "?";
}

std::string poly_text(const Poly& q) { return poly_descending(q, text_term); }

std::string poly_latex(const Poly& q) { return poly_descending(q, latex_term); }

std::string poly_json(const Poly& q) {
  ordered_json arr = ordered_json::array();
  for (const Rational& c : q.coeffs()) arr.push_back(to_string(c));
  return arr.dump();
}

std::string rational_latex(const Rational& x) {
  if (is_integer(x)) return to_string(x);
  const bool negative = x < 0;
  const Rational magnitude = negative ? Rational(-x) : x;
  return std::string(negative ? "-" : "") + "\\frac{" + numerator(magnitude).str() + "}{" +
         denominator(magnitude).str() + "}";
}

std::string render_rational(const Rational& x, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return to_string(x);
    case OutputFormat::Json: return ordered_json(to_string(x)).dump();
    case OutputFormat::Csv: return csv_quote(to_string(x));
    case OutputFormat::Latex: return rational_latex(x);
  }
  return {};
}

std::string render_poly(const Poly& q, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return poly_text(q);
    case OutputFormat::Json: return poly_json(q);
    case OutputFormat::Latex: return poly_latex(q);
    case OutputFormat::Csv: {
      std::string out = "i,coefficient\n";
      for (int i = 0; i <= q.degree(); ++i)
        out += std::to_string(i) + "," + csv_quote(to_string(q.coeff(i))) + "\n";
      if (q.is_zero()) out += "0," + csv_quote("0") + "\n";
      return out;
    }
  }
  return {};
}

std::string render_numbers(const std::vector<Rational>& values, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: {
      std::string out;
      for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += to_string(values[i]);
      }
      return out;
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const Rational& v : values) arr.push_back(to_string(v));
      return arr.dump();
    }
    case OutputFormat::Csv: {
      std::string out = "n,value\n";
      for (size_t i = 0; i < values.size(); ++i)
        out += std::to_string(i) + "," + csv_quote(to_string(values[i])) + "\n";
      return out;
    }
    case OutputFormat::Latex: {
      std::string out;
      for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += rational_latex(values[i]);
      }
      return out;
    }
  }
  return {};
}

std::string render_table(const std::vector<Poly>& polys, OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: {
      std::string out;
      for (size_t n = 0; n < polys.size(); ++n)
        out += std::to_string(n) + ": " + poly_text(polys[n]) + "\n";
      return out;
    }
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const Poly& q : polys) {
        ordered_json row = ordered_json::array();
        for (const Rational& c : q.coeffs()) row.push_back(to_string(c));
        arr.push_back(std::move(row));
      }
      return arr.dump();
    }
    case OutputFormat::Csv: {
      std::string out = "n,coefficients\n";
      for (size_t n = 0; n < polys.size(); ++n) {
        std::string joined;
        for (int i = 0; i <= polys[n].degree(); ++i) {
          if (i) joined += ";";
          joined += to_string(polys[n].coeff(i));
        }
        if (polys[n].is_zero()) joined = "0";
        out += std::to_string(n) + "," + csv_quote(joined) + "\n";
      }
      return out;
    }
    case OutputFormat::Latex: {
      std::string out;
      for (size_t n = 0; n < polys.size(); ++n)
        out += "V_{" + std::to_string(n) + "}(x) &= " + poly_latex(polys[n]) + " \\\\\n";
      return out;
    }
  }
  return {};
}

std::string render_reports(const std::vector<CheckReport>& reports, OutputFormat f) {
  std::string out;
  if (f == OutputFormat::Csv) out = "identity_id,index,instance,lhs,rhs,equal,note,seed\n";
  for (const CheckReport& r : reports) {
    switch (f) {
      case OutputFormat::Text: {
        out += r.equal ? "PASS " : (r.note.empty() ? "FAIL " : "FAIL*");
        out += " " + r.identity_id + " #" + std::to_string(r.index);
        out += " " + instance_text(r, ' ');
        out += " lhs=" + value_text(r.lhs) + " rhs=" + value_text(r.rhs);
        out += " seed=" + std::to_string(r.seed);
        if (!r.note.empty()) out += " | " + r.note;
        out += "\n";
        break;
      }
      case OutputFormat::Json: {
        ordered_json j;
        j["identity_id"] = r.identity_id;
        j["index"] = r.index;
        ordered_json inst = ordered_json::object();
        for (const auto& [k, v] : r.instance) inst[k] = v;
        j["instance"] = std::move(inst);
        j["lhs"] = value_json(r.lhs);
        j["rhs"] = value_json(r.rhs);
        j["equal"] = r.equal;
        j["note"] = r.note;
        j["seed"] = r.seed;
        out += j.dump() + "\n";
        break;
      }
      case OutputFormat::Csv: {
        out += csv_quote(r.identity_id) + "," + std::to_string(r.index) + ",";
        out += csv_quote(instance_text(r, ';')) + ",";
        out += csv_quote(value_text(r.lhs)) + "," + csv_quote(value_text(r.rhs)) + ",";
        out += r.equal ? "true" : "false";
        out += "," + csv_quote(r.note) + "," + std::to_string(r.seed) + "\n";
        break;
      }
      case OutputFormat::Latex: {
        out += "\\texttt{" + r.identity_id + "} & " + std::to_string(r.index) + " & \\texttt{" +
               instance_text(r, ';') + "} & $" + value_latex(r.lhs) + "$ & $" +
               value_latex(r.rhs) + "$ & " + (r.equal ? "\\checkmark" : "\\times") + " \\\\\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace apostol
