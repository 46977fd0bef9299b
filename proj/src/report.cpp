#include "delpezzo/report.hpp"

#include <iomanip>
#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo {

Json to_json(const Rat& x) { return x.to_string(); }

Json to_json(const SqrtCombo& x) {
  Json out = Json::array();
  for (const auto& [m, c] : x.terms()) {
    if (!m.fits_slong_p()) throw RefusalError("radicand does not fit a 64-bit integer");
    out.push_back(Json::array({m.get_si(), c.to_string()}));
  }
  return out;
}

Json to_json(const FFVector& v) {
  Json out = Json::array();
  for (auto a : v.coords) {
    Json coeffs = Json::array();
    for (unsigned j = 0; j < v.field.f; ++j) {
      coeffs.push_back(a % v.field.p);
      a /= v.field.p;
    }
    out.push_back(std::move(coeffs));
  }
  return out;
}

Json to_json(const LineSystem& s) {
  Json points = Json::array();
  for (const auto& line : s.lines) {
    for (const Point4* pt : {&line.p, &line.q}) {
      Json coords = Json::array();
      for (const auto& x : *pt) coords.push_back(to_json(x));
      points.push_back(std::move(coords));
    }
  }
  return Json{{"points", std::move(points)}, {"gram", s.gram}};
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw InputError("expected a rational as a \"p/q\" string, got " + j.dump());
}

SqrtCombo sqrt_combo_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of [m, \"p/q\"] pairs");
  SqrtCombo out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
      throw InputError("malformed radical term " + term.dump());
    }
    out += SqrtCombo::term(rat_from_json(term[1]), Integer(static_cast<long>(term[0].get<long long>())));
  }
  return out;
}

std::string Report::machine() const {
  const Json j{{"command", command}, {"verdicts", verdicts}, {"witnesses", witnesses}};
  return j.dump(2) + "\n";
}

std::string Report::human() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  for (const auto& [key, value] : verdicts.items()) os << "  " << key << ": " << value.dump() << "\n";
  for (const auto& [key, value] : witnesses.items()) {
    const std::string text = value.dump();
    os << "  witness " << key << ": ";
    if (text.size() > 200) {
      os << text.substr(0, 200) << "... (use --json for the full value)";
    } else {
      os << text;
    }
    os << "\n";
  }
  os << "time: " << std::fixed << std::setprecision(1) << elapsed_ms << " ms\n";
  return os.str();
}

Report Report::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("command") || !j.contains("verdicts")) {
    throw InputError("report lacks command or verdicts");
  }
  Report r;
  r.command = j.at("command").get<std::string>();
  r.verdicts = j.at("verdicts");
  r.witnesses = j.value("witnesses", Json::object());
  return r;
}

}  // namespace delpezzo
