#include "kradical/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "kradical/monodromy.hpp"

namespace kradical {

namespace {

using nlohmann::json;

long max_prec(const KCertificate& cert) {
  long bits = 0;
  for (const FactorReport& fr : cert.factors)
    bits = std::max(bits, fr.prec_bits);
  return bits;
}

json factor_json(const FactorReport& fr) {
  json coeffs = json::array();
  for (int i = 0; i <= fr.poly.deg(); ++i)
    coeffs.push_back(fr.poly.coeff(i).str());
  json pass = json::array();
  for (const std::string& s : fr.group.passport) pass.push_back(s);
  return json{{"degree", fr.degree},
              {"coeffs", coeffs},
              {"passport", pass},
              {"group",
               {{"name", fr.group.name()},
                {"order", fr.group.order.get_str()},
                {"primitive", fr.group.primitive}}},
              {"k_factor", fr.k_factor}};
}

}  // namespace

std::string report_json(const std::string& input, const KCertificate& cert,
                        int answer_k) {
  json factors = json::array();
  for (const FactorReport& fr : cert.factors) factors.push_back(factor_json(fr));
  json j{{"version", kReportVersion},
         {"input", input},
         {"precision_bits", max_prec(cert)},
         {"factors", std::move(factors)},
         {"overall_k", cert.overall_k}};
  if (answer_k >= 1)
    j["answer_for_k"] = json{{"k", answer_k},
                             {"yes", cert.overall_k <= answer_k}};
  return j.dump(2);
}

std::string report_text(const std::string& input, const KCertificate& cert,
                        int answer_k, double elapsed) {
  std::ostringstream os;
  os << "input: " << input << "\n";
  os << "decomposition: ";
  for (size_t i = 0; i < cert.factors.size(); ++i)
    os << (i ? " o " : "") << "deg " << cert.factors[i].degree;
  os << "\n";
  for (size_t i = 0; i < cert.factors.size(); ++i) {
    const FactorReport& fr = cert.factors[i];
    os << "factor " << i + 1 << " (degree " << fr.degree << ")\n";
    os << "  monodromy: " << fr.group.name() << ", order "
       << fr.group.order.get_str()
       << (fr.group.primitive ? ", primitive" : ", imprimitive");
    std::string note = fr.group.action_note();
    if (!note.empty()) os << ", action " << note;
    os << "\n";
    if (!fr.group.passport.empty())
      os << "  passport: " << passport_str(fr.group.passport) << "\n";
    os << "  minimal k: " << fr.k_factor << "\n";
  }
  os << "overall minimal k: " << cert.overall_k << "\n";
  if (answer_k >= 1)
    os << "invertible in " << answer_k
       << "-radicals: " << (cert.overall_k <= answer_k ? "yes" : "no") << "\n";
  long bits = max_prec(cert);
  if (bits > 0) os << "precision: " << bits << " bits\n";
  if (elapsed >= 0.0)
    os << "time: " << std::fixed << std::setprecision(2) << elapsed << " s\n";
  return os.str();
}

}  // namespace kradical
