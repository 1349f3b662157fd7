#include "mediagame/model.hpp"

#include <cmath>
#include <sstream>

namespace mediagame {

std::string_view field_name(ParamField f) {
  switch (f) {
    case ParamField::Sigma: return "sigma";
    case ParamField::Pi: return "pi";
    case ParamField::Q: return "q";
    case ParamField::K: return "k";
    case ParamField::S: return "s";
    case ParamField::UC: return "u_c";
    case ParamField::Phi: return "phi";
  }
  return "?";
}

ParamField parse_field(std::string_view name) {
  for (ParamField f : kAllFields) {
    if (field_name(f) == name) return f;
  }
  if (name == "uc") return ParamField::UC;
  throw std::invalid_argument("unknown parameter field '" + std::string(name) + "'");
}

double RawParams::get(ParamField f) const {
  switch (f) {
    case ParamField::Sigma: return sigma;
    case ParamField::Pi: return pi;
    case ParamField::Q: return q;
    case ParamField::K: return k;
    case ParamField::S: return s;
    case ParamField::UC: return u_c;
    case ParamField::Phi: return phi;
  }
  return 0.0;
}

void RawParams::set(ParamField f, double v) {
  switch (f) {
    case ParamField::Sigma: sigma = v; break;
    case ParamField::Pi: pi = v; break;
    case ParamField::Q: q = v; break;
    case ParamField::K: k = v; break;
    case ParamField::S: s = v; break;
    case ParamField::UC: u_c = v; break;
    case ParamField::Phi: phi = v; break;
  }
}

namespace {

[[noreturn]] void out_of_range(ParamField f, double v, const char* bound) {
  std::ostringstream os;
  os << field_name(f) << " = " << v << " is out of range; expected " << bound;
  throw ParamError(ParamErrorKind::OutOfRange, f, os.str());
}

}  // namespace

ModelParams validate_params(const RawParams& raw) {
  for (ParamField f : kAllFields) {
    if (!std::isfinite(raw.get(f))) {
      throw ParamError(ParamErrorKind::NonFinite, f,
                       std::string(field_name(f)) + " must be a finite number");
    }
  }
  if (!(raw.sigma > 0.0 && raw.sigma < 1.0)) out_of_range(ParamField::Sigma, raw.sigma, "(0, 1)");
  if (!(raw.pi > 0.0 && raw.pi < 1.0)) out_of_range(ParamField::Pi, raw.pi, "(0, 1)");
  if (!(raw.q > 0.5 && raw.q < 1.0)) out_of_range(ParamField::Q, raw.q, "(1/2, 1)");
  if (!(raw.k >= 0.0)) out_of_range(ParamField::K, raw.k, "[0, inf)");
  if (!(raw.s >= 0.0)) out_of_range(ParamField::S, raw.s, "[0, inf)");
  if (!(raw.u_c >= -raw.s && raw.u_c <= 1.0)) out_of_range(ParamField::UC, raw.u_c, "[-s, 1]");
  if (!(raw.phi >= 0.0 && raw.phi <= 1.0)) out_of_range(ParamField::Phi, raw.phi, "[0, 1]");
  return ModelParams(raw);
}

ModelParams ModelParams::with(ParamField f, double value) const {
  RawParams r = raw_;
  r.set(f, value);
  return validate_params(r);
}

std::string_view to_string(IncumbentType t) {
  switch (t) {
    case IncumbentType::High: return "High";
    case IncumbentType::Low: return "Low";
    case IncumbentType::Subversive: return "Subversive";
  }
  return "?";
}

double prior_mass(const ModelParams& p, IncumbentType t) {
  switch (t) {
    case IncumbentType::High: return (1.0 - p.sigma()) * p.pi();
    case IncumbentType::Low: return (1.0 - p.sigma()) * (1.0 - p.pi());
    case IncumbentType::Subversive: return p.sigma();
  }
  return 0.0;
}

double type_utility(const ModelParams& p, IncumbentType t) {
  switch (t) {
    case IncumbentType::High: return 1.0;
    case IncumbentType::Low: return 0.0;
    case IncumbentType::Subversive: return -p.s();
  }
  return 0.0;
}

std::string to_string(ObservationClass c) {
  return std::string(c.agree ? "agree" : "disagree") + "," +
         (c.report == AltReport::Subversive ? "S" : "NS");
}

std::string describe(const StrategyProfile& profile) {
  std::string out = profile.high_effort ? "effort" : "no-effort";
  out += "; retain on {";
  bool first = true;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    const auto c = ObservationClass::from_index(i);
    if (!profile.voter_rule.retains(c)) continue;
    if (!first) out += " ";
    out += "(" + to_string(c) + ")";
    first = false;
  }
  out += "}";
  return out;
}

double OutcomeTable::total() const {
  double sum = 0.0;
  for (double w : by_class_) sum += w;
  return sum;
}

double OutcomeTable::type_mass(IncumbentType t) const {
  double sum = 0.0;
  for (double w : by_type_class_[index_of(t)]) sum += w;
  return sum;
}

double OutcomeTable::conditional(ObservationClass c, IncumbentType t) const {
  const double mass = type_mass(t);
  return mass > 0.0 ? joint(t, c) / mass : 0.0;
}

OutcomeTable outcome_distribution(const ModelParams& params, const StrategyProfile& profile,
                                  EnumerationOptions options) {
  OutcomeTable table;
  table.atoms_.reserve(OutcomeTable::kNumAtoms);
  const double q = params.q();
  const double phi = params.phi();

  for (IncumbentType type : kAllTypes) {
    const double prior = prior_mass(params, type);
    const bool informed = type == IncumbentType::High && profile.high_effort;
    const bool captured = type == IncumbentType::Subversive;
    for (int state = 0; state < 2; ++state) {
      for (int policy = 0; policy < 2; ++policy) {
        const double p_policy = informed ? (policy == state ? 1.0 : 0.0) : 0.5;
        for (int message = 0; message < 2; ++message) {
          double p_message;
          if (captured) {
            p_message = message == policy ? 1.0 : 0.0;
          } else {
            p_message = message == state ? q : 1.0 - q;
          }
          for (int malicious = 0; malicious < 2; ++malicious) {
            const double p_alt = malicious ? phi : 1.0 - phi;
            const AltReport report = (malicious || captured) ? AltReport::Subversive
                                                             : AltReport::NotSubversive;
            const double w = prior * 0.5 * p_policy * p_message * p_alt;
            Atom atom{type,
                      options.swap_labels ? 1 - state : state,
                      informed,
                      options.swap_labels ? 1 - policy : policy,
                      options.swap_labels ? 1 - message : message,
                      malicious != 0,
                      report,
                      w};
            const auto c = atom.observation().index();
            table.by_class_[c] += w;
            table.by_type_class_[index_of(type)][c] += w;
            table.atoms_.push_back(atom);
          }
        }
      }
    }
  }
  return table;
}

double observation_probability(const OutcomeTable& table, ObservationClass obs) {
  return table.class_probability(obs);
}

}  // namespace mediagame
