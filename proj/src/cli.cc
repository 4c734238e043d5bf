// Copyright 2026 The rrfair Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "rrfair/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rrfair/certificates.h"
#include "rrfair/equilibria.h"
#include "rrfair/errors.h"
#include "rrfair/fairness.h"
#include "rrfair/fixtures.h"
#include "rrfair/generators.h"
#include "rrfair/instance.h"
#include "rrfair/mechanism.h"
#include "rrfair/profiles.h"
#include "rrfair/serialization.h"

namespace rrfair::cli {
namespace {

using nlohmann::json;

struct CommonFlags {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
  bool require_equilibrium = false;
};

// Formatting.

std::string Decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", r.ToDouble());
  return buf;
}

std::string Show(const Rational& r) {
  return r.ToString() + " (" + Decimal(r) + ")";
}

std::string Show(const Factor& f) {
  return f.unbounded() ? std::string("unbounded") : Show(f.value());
}

json J(const Rational& r) { return RationalToJson(r); }
json J(const Factor& f) {
  return f.unbounded() ? json("unbounded") : J(f.value());
}

json J(Bundle b) {
  json out = json::array();
  for (GoodId g : b.Goods()) out.push_back(GoodName(g));
  return out;
}

json J(const Ranking& r) {
  json out = json::array();
  for (GoodId g : r.order()) out.push_back(GoodName(g));
  return out;
}

std::string AgentName(AgentId i) { return "agent " + std::to_string(i + 1); }

// Inputs.

// A path to an instance document, or a fixture name with default parameters.
Instance LoadInstanceArg(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    if (auto id = ParseFixtureName(arg)) {
      switch (*id) {
        case FixtureId::kNoPne:
          return NoPneInstance();
        case FixtureId::kBluffTightness:
          return BluffTightnessInstance();
        case FixtureId::kAdditiveEf1:
          return AdditiveEf1TightnessInstance();
        case FixtureId::kOxsEf1:
          return OxsEf1TightnessInstance();
      }
    }
  }
  return LoadInstanceFile(arg);
}

// Profile over the padded instance. `source` is bluff, truthful or a path
// to a profile document over the real goods.
Profile ResolveProfile(const std::string& source, const Instance& original,
                       const PaddedInstance& padded) {
  if (source == "bluff") return BluffProfile(padded.instance);
  if (source == "truthful") {
    return ExtendProfile(TruthfulProfile(original), padded.instance.num_goods());
  }
  return ExtendProfile(LoadProfileFile(source, original.num_agents(),
                                       original.num_goods()),
                       padded.instance.num_goods());
}

std::string FormatRanking(const Ranking& r, int real_goods) {
  return FormatSequence(r.RestrictedTo(real_goods).order());
}

Bundle Real(Bundle b, int real_goods) { return b & Bundle::Full(real_goods); }

// Bound selection shared by run and scan.

struct BoundContext {
  std::optional<InstanceClasses> classes;  // empty when certification skipped
  std::string skipped;
};

BoundContext Certify(const Instance& inst) {
  BoundContext ctx;
  try {
    ctx.classes = CertifyInstance(inst);
  } catch (const SizeGuardExceeded&) {
    ctx.skipped = "skipped: size guard";
  }
  return ctx;
}

struct BoundVerdict {
  bool applies = false;
  Rational bound;
  std::string rule;
  bool holds = true;
};

BoundVerdict Judge(const BoundContext& ctx, int n, const Rational& alpha,
                   const Factor& ef1) {
  BoundVerdict v;
  if (!ctx.classes) return v;
  try {
    auto [bound, rule] = ApplicableBound(*ctx.classes, n, alpha);
    v.applies = true;
    v.bound = std::move(bound);
    v.rule = std::move(rule);
    v.holds = ef1.AtLeast(v.bound);
  } catch (const InvalidArgument&) {
  }
  return v;
}

// run

struct RunResult {
  json report;
  std::string text;
  bool equilibrium_skipped = false;
  std::optional<EquilibriumReport> equilibrium;
  FairnessReport fairness;
  Allocation allocation;  // dummies stripped
};

RunResult RunScenario(const Instance& inst, const Profile& real_or_padded,
                      const std::string& profile_label, bool padded_profile) {
  const PaddedInstance padded = PadToMultiple(inst);
  const int real = inst.num_goods();
  const Profile profile =
      padded_profile ? real_or_padded
                     : ExtendProfile(real_or_padded, padded.instance.num_goods());
  RunResult res;
  std::ostringstream os;
  json report;

  os << "instance: " << (inst.description().empty() ? "(unnamed)"
                                                    : inst.description())
     << "\n  n = " << inst.num_agents() << ", m = " << real;
  if (padded.padding > 0) {
    os << " (padded with " << padded.padding << " dummy good"
       << (padded.padding > 1 ? "s" : "") << ")";
  }
  os << "\n";
  report["instance"] = {{"description", inst.description()},
                        {"n", inst.num_agents()},
                        {"m", real},
                        {"padding", padded.padding}};

  os << "profile: " << profile_label << "\n";
  json jprofile = json::array();
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    os << "  " << AgentName(i) << ": " << FormatRanking(profile[i], real)
       << "\n";
    jprofile.push_back(J(profile[i].RestrictedTo(real)));
  }
  report["profile"] = {{"source", profile_label}, {"rankings", jprofile}};

  const RoundRobinRun run = RoundRobin(padded.instance, profile);
  res.allocation = run.allocation.StrippedTo(real);
  os << "allocation:\n";
  json jalloc = json::array();
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const Rational v = inst.valuation(i).Value(res.allocation[i]);
    os << "  " << AgentName(i) << ": " << FormatBundle(res.allocation[i])
       << "  value " << Show(v) << "\n";
    jalloc.push_back({{"bundle", J(res.allocation[i])}, {"value", J(v)}});
  }
  report["allocation"] = jalloc;

  os << "equilibrium:\n";
  try {
    EquilibriumAnalyzer analyzer(padded.instance);
    res.equilibrium = analyzer.Analyze(profile);
  } catch (const SizeGuardExceeded&) {
    res.equilibrium_skipped = true;
  }
  if (res.equilibrium) {
    json jagents = json::array();
    for (AgentId i = 0; i < inst.num_agents(); ++i) {
      const AgentEquilibrium& a = res.equilibrium->per_agent[i];
      os << "  " << AgentName(i) << ": value " << Show(a.current_value)
         << ", best response " << Show(a.best.value) << " with "
         << FormatBundle(Real(a.best.bundle, real)) << ", ratio "
         << Show(a.ratio) << "\n";
      jagents.push_back({{"value", J(a.current_value)},
                         {"best_response_value", J(a.best.value)},
                         {"best_response_bundle", J(Real(a.best.bundle, real))},
                         {"best_response_ranking",
                          J(a.best.ranking.RestrictedTo(real))},
                         {"ratio", J(a.ratio)}});
    }
    os << "  pne_factor: " << Show(res.equilibrium->pne_factor) << "\n";
    report["equilibrium"] = {{"agents", jagents},
                             {"pne_factor", J(res.equilibrium->pne_factor)}};
  } else {
    os << "  pne_factor: skipped: size guard\n";
    report["equilibrium"] = "skipped: size guard";
  }

  res.fairness = ScoreFairness(inst, res.allocation);
  os << "fairness:\n  ef1_factor: " << Show(res.fairness.ef1_factor);
  if (res.fairness.worst_pair) {
    const PairRatio& w = *res.fairness.worst_pair;
    os << " (" << AgentName(w.i) << " towards " << AgentName(w.j)
       << ", removing " << GoodName(w.removed) << ")";
  }
  os << "\n  ef_factor: " << Show(res.fairness.ef_factor) << "\n";
  json jpairs = json::array();
  for (const PairRatio& p : res.fairness.pairs) {
    jpairs.push_back({{"i", p.i + 1},
                      {"j", p.j + 1},
                      {"ef1", J(p.ef1)},
                      {"ef", J(p.ef)},
                      {"removed", p.removed < 0 ? json(nullptr)
                                                : json(GoodName(p.removed))}});
  }
  report["fairness"] = {{"ef1_factor", J(res.fairness.ef1_factor)},
                        {"ef_factor", J(res.fairness.ef_factor)},
                        {"pairs", jpairs}};

  os << "bound: ";
  if (!res.equilibrium) {
    os << "skipped: size guard\n";
    report["bound"] = "skipped: size guard";
  } else {
    const BoundContext ctx = Certify(inst);
    const BoundVerdict v = Judge(ctx, inst.num_agents(),
                                 res.equilibrium->pne_factor,
                                 res.fairness.ef1_factor);
    if (!ctx.classes) {
      os << ctx.skipped << "\n";
      report["bound"] = ctx.skipped;
    } else if (!v.applies) {
      os << "none applicable\n";
      report["bound"] = nullptr;
    } else {
      os << v.rule << " = " << Show(v.bound) << ", ef1_factor >= bound: "
         << (v.holds ? "yes" : "NO") << "\n";
      report["bound"] = {
          {"rule", v.rule}, {"value", J(v.bound)}, {"holds", v.holds}};
    }
  }
  res.report = std::move(report);
  res.text = os.str();
  return res;
}

int CmdRun(const std::string& instance_arg, const std::string& profile_source,
           const CommonFlags& flags, std::ostream& out) {
  const Instance inst = LoadInstanceArg(instance_arg);
  const PaddedInstance padded = PadToMultiple(inst);
  const Profile profile = ResolveProfile(profile_source, inst, padded);
  const RunResult res = RunScenario(inst, profile, profile_source, true);
  if (flags.json) {
    out << res.report.dump(2) << "\n";
  } else {
    out << res.text;
  }
  if (res.equilibrium_skipped && flags.require_equilibrium) return kExitGuard;
  return kExitOk;
}

// scan

struct ScanSummary {
  std::uint64_t profiles = 0;
  std::optional<Rational> max_pne;
  std::optional<Rational> min_pne;
  Factor min_ef1 = Factor::Unbounded();
  std::uint64_t violations = 0;
  bool bound_checked = false;
};

ScanSummary ScanInstance(const Instance& inst, const ScanOptions& options,
                         bool quiet, bool as_json, std::ostream& out) {
  const PaddedInstance padded = PadToMultiple(inst);
  const int real = inst.num_goods();
  const BoundContext ctx = Certify(inst);
  ScanSummary s;
  s.bound_checked = ctx.classes.has_value();
  ScanProfiles(padded.instance, options, [&](const ScanRecord& r) {
    ++s.profiles;
    const Rational& alpha = r.equilibrium.pne_factor;
    if (!s.max_pne || alpha > *s.max_pne) s.max_pne = alpha;
    if (!s.min_pne || alpha < *s.min_pne) s.min_pne = alpha;
    if (r.fairness.ef1_factor < s.min_ef1) s.min_ef1 = r.fairness.ef1_factor;
    const BoundVerdict v =
        Judge(ctx, inst.num_agents(), alpha, r.fairness.ef1_factor);
    if (v.applies && !v.holds) ++s.violations;
    if (quiet) return;
    if (as_json) {
      json rankings = json::array();
      for (const Ranking& rk : r.profile) {
        rankings.push_back(J(rk.RestrictedTo(real)));
      }
      json line = {{"index", r.index},
                   {"profile", rankings},
                   {"pne_factor", J(alpha)},
                   {"ef1_factor", J(r.fairness.ef1_factor)}};
      if (v.applies) {
        line["bound"] = J(v.bound);
        line["holds"] = v.holds;
      }
      out << line.dump() << "\n";
      return;
    }
    out << "#" << r.index;
    for (const Ranking& rk : r.profile) out << " " << FormatRanking(rk, real);
    out << "  pne " << alpha.ToString() << "  ef1 "
        << r.fairness.ef1_factor.ToString();
    if (v.applies) {
      out << "  bound " << v.bound.ToString() << (v.holds ? " ok" : " VIOLATED");
    }
    out << "\n";
  });
  return s;
}

std::string SummaryLine(const ScanSummary& s) {
  std::ostringstream os;
  os << s.profiles << " profiles, max pne_factor "
     << (s.max_pne ? s.max_pne->ToString() : "n/a") << ", min pne_factor "
     << (s.min_pne ? s.min_pne->ToString() : "n/a") << ", min ef1_factor "
     << s.min_ef1.ToString() << ", violations ";
  if (s.bound_checked) {
    os << s.violations;
  } else {
    os << "n/a (skipped: size guard)";
  }
  return os.str();
}

json SummaryJson(const ScanSummary& s) {
  return {{"profiles", s.profiles},
          {"max_pne_factor", s.max_pne ? J(*s.max_pne) : json(nullptr)},
          {"min_pne_factor", s.min_pne ? J(*s.min_pne) : json(nullptr)},
          {"min_ef1_factor", J(s.min_ef1)},
          {"violations", s.bound_checked ? json(s.violations) : json(nullptr)}};
}

int CmdScan(const std::string& instance_arg, bool exhaustive,
            std::uint64_t samples, bool quiet, const CommonFlags& flags,
            std::ostream& out) {
  const Instance inst = LoadInstanceArg(instance_arg);
  ScanOptions options;
  options.exhaustive = exhaustive || samples == 0;
  options.samples = samples;
  options.seed = flags.seed;
  options.threads = flags.threads;
  const ScanSummary s = ScanInstance(inst, options, quiet, flags.json, out);
  if (flags.json) {
    out << json{{"summary", SummaryJson(s)}}.dump() << "\n";
  } else {
    out << SummaryLine(s) << "\n";
  }
  return s.violations == 0 ? kExitOk : kExitMismatch;
}

// certify

int CmdCertify(const std::string& instance_arg, const CommonFlags& flags,
               std::ostream& out) {
  const Instance inst = LoadInstanceArg(instance_arg);
  using Check = std::function<Certificate(const Valuation&)>;
  const std::vector<std::pair<std::string, Check>> checks = {
      {"monotone", CheckMonotone},
      {"submodular", CheckSubmodular},
      {"cancelable", CheckCancelable},
      {"subadditive", CheckSubadditive},
  };
  json jagents = json::array();
  for (AgentId i = 0; i < inst.num_agents(); ++i) {
    const Valuation& v = inst.valuation(i);
    json jchecks = json::object();
    if (!flags.json) out << AgentName(i) << " (" << KindName(v.kind()) << "):\n";
    for (const auto& [name, check] : checks) {
      json entry;
      std::string line;
      try {
        const Certificate c = check(v);
        entry["holds"] = c.holds;
        line = c.holds ? "yes" : "no";
        if (c.witness) {
          entry["witness"] = {{"S", J(c.witness->s)},
                              {"T", J(c.witness->t)},
                              {"g", GoodName(c.witness->good)}};
          line += "  witness " + FormatWitness(*c.witness);
        }
      } catch (const SizeGuardExceeded&) {
        entry = "skipped: size guard";
        line = "skipped: size guard";
      }
      jchecks[name] = entry;
      if (!flags.json) {
        out << "  " << name << std::string(13 - name.size(), ' ') << line
            << "\n";
      }
    }
    jagents.push_back({{"agent", i + 1},
                       {"class", KindName(v.kind())},
                       {"checks", jchecks}});
  }
  if (flags.json) out << json{{"agents", jagents}}.dump(2) << "\n";
  return kExitOk;
}

// generate

int CmdGenerate(const std::string& cls, int agents, int goods, int max_weight,
                int max_denominator, const std::string& output,
                const CommonFlags& flags, std::ostream& out) {
  const auto parsed = ParseGeneratorClass(cls);
  if (!parsed) throw ParseError("unknown generator class \"" + cls + "\"");
  GeneratorSpec spec;
  spec.cls = *parsed;
  spec.num_agents = agents;
  spec.num_goods = goods;
  spec.max_weight = max_weight;
  spec.max_denominator = max_denominator;
  spec.seed = flags.seed;
  const Instance inst = Generate(spec);
  if (output.empty()) {
    out << SaveInstance(inst);
  } else {
    SaveInstanceFile(inst, output);
  }
  return kExitOk;
}

// best-response

int CmdBestResponse(const std::string& instance_arg, int agent,
                    const std::string& profile_source, const CommonFlags& flags,
                    std::ostream& out) {
  const Instance inst = LoadInstanceArg(instance_arg);
  if (agent < 1 || agent > inst.num_agents()) {
    throw InvalidArgument("agent must be in 1.." +
                          std::to_string(inst.num_agents()));
  }
  const AgentId i = agent - 1;
  const PaddedInstance padded = PadToMultiple(inst);
  const int real = inst.num_goods();
  const Profile profile = ResolveProfile(profile_source, inst, padded);
  EquilibriumAnalyzer analyzer(padded.instance);
  const BestResponse br = analyzer.BestResponseOf(i, profile);
  const Bundle current = RoundRobin(padded.instance, profile).allocation[i];
  const Rational value = inst.valuation(i).Value(Real(current, real));
  const Factor ratio =
      br.value.IsZero() ? Factor::Unbounded() : Factor::Of(value / br.value);
  if (flags.json) {
    out << json{{"agent", agent},
                {"profile", profile_source},
                {"current_bundle", J(Real(current, real))},
                {"current_value", J(value)},
                {"best_response_ranking", J(br.ranking.RestrictedTo(real))},
                {"best_response_bundle", J(Real(br.bundle, real))},
                {"best_response_value", J(br.value)},
                {"ratio", J(ratio)},
                {"explored_states", br.explored_states}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << AgentName(i) << " under " << profile_source << ":\n"
      << "  current: " << FormatBundle(Real(current, real)) << " value "
      << Show(value) << "\n"
      << "  best response: " << FormatRanking(br.ranking, real) << "\n"
      << "  bundle: " << FormatBundle(Real(br.bundle, real)) << " value "
      << Show(br.value) << "\n"
      << "  ratio: " << Show(ratio) << "\n"
      << "  explored states: " << br.explored_states << "\n";
  return kExitOk;
}

// reproduce

struct Expectation {
  std::string quantity;
  std::string expected;
  std::string actual;
  bool Matches() const { return expected == actual; }
};

std::string Yes(bool b) { return b ? "yes" : "no"; }

std::string AllocationString(const Allocation& a) {
  std::string s;
  for (std::size_t i = 0; i < a.bundles.size(); ++i) {
    if (i) s += "/";
    s += FormatBundle(a.bundles[i]);
  }
  return s;
}

struct FixtureOverrides {
  std::optional<std::string> eps1, eps2, eps3, delta, beta, eps;
};

Rational Param(const std::optional<std::string>& text, const Rational& dflt) {
  return text ? Rational::Parse(*text) : dflt;
}

int CmdReproduce(const std::string& name, const FixtureOverrides& o,
                 const CommonFlags& flags, std::ostream& out) {
  const auto id = ParseFixtureName(name);
  if (!id) {
    throw ParseError("unknown fixture \"" + name +
                     "\"; expected prop3, thm4, thm9 or prop10");
  }
  std::vector<Expectation> table;
  json report;
  std::string text;
  std::string params;
  auto expect = [&](std::string q, const std::string& e, const std::string& a) {
    table.push_back({std::move(q), e, a});
  };

  switch (*id) {
    case FixtureId::kNoPne: {
      ScanOptions options;
      options.threads = flags.threads;
      std::ostringstream sink;
      const ScanSummary s =
          ScanInstance(NoPneInstance(), options, true, false, sink);
      text = SummaryLine(s) + "\n";
      report["scan"] = SummaryJson(s);
      expect("profiles", "576", std::to_string(s.profiles));
      expect("max pne_factor", "3/4", s.max_pne ? s.max_pne->ToString() : "");
      break;
    }
    case FixtureId::kBluffTightness: {
      BluffTightnessParams p;
      p.eps1 = Param(o.eps1, p.eps1);
      p.eps2 = Param(o.eps2, p.eps2);
      p.eps3 = Param(o.eps3, p.eps3);
      params = "eps1 = " + p.eps1.ToString() + ", eps2 = " + p.eps2.ToString() +
               ", eps3 = " + p.eps3.ToString();
      const Instance inst = BluffTightnessInstance(p);
      const PaddedInstance padded = PadToMultiple(inst);
      const RunResult r =
          RunScenario(inst, BluffProfile(padded.instance), "bluff", true);
      text = r.text;
      report["run"] = r.report;
      const Rational two(2);
      expect("allocation", "{g1,g3,g5}/{g2,g4}", AllocationString(r.allocation));
      expect("agent 2 best response value",
             (two - p.eps1 - p.eps2).ToString(),
             r.equilibrium->per_agent[1].best.value.ToString());
      expect("pne_factor", (Rational(1) / (two - p.eps1 - p.eps2)).ToString(),
             r.equilibrium->pne_factor.ToString());
      expect("agent 2 ef1 ratio towards agent 1",
             (Rational(1) / (two - p.eps1 - p.eps3)).ToString(),
             r.fairness.pair(1, 0).ef1.ToString());
      expect("pne_factor >= 1/2", "yes",
             Yes(r.equilibrium->pne_factor >= Rational(1, 2)));
      expect("ef1_factor >= 1/2", "yes",
             Yes(r.fairness.ef1_factor.AtLeast(Rational(1, 2))));
      break;
    }
    case FixtureId::kAdditiveEf1: {
      AdditiveEf1TightnessParams p;
      p.delta = Param(o.delta, p.delta);
      p.beta = Param(o.beta, p.beta);
      params = "delta = " + p.delta.ToString() + ", beta = " + p.beta.ToString();
      const Instance inst = AdditiveEf1TightnessInstance(p);
      const RunResult r = RunScenario(inst, AdditiveEf1TightnessProfile(inst),
                                      "deviating last agent", false);
      text = r.text;
      report["run"] = r.report;
      const Rational one(1), two(2), three(3), half(1, 2);
      const Rational alpha =
          (one + p.delta) / (three * p.beta + half + two * p.delta);
      const Rational ratio = (one + p.delta) / (Rational(6) * p.beta + p.delta);
      const Rational bound = alpha / (two - alpha);
      expect("allocation", "{g1,g2,g3}/{g4,g5}", AllocationString(r.allocation));
      expect("alpha", alpha.ToString(), r.equilibrium->pne_factor.ToString());
      expect("agent 2 ef1 ratio towards agent 1", ratio.ToString(),
             r.fairness.pair(1, 0).ef1.ToString());
      const Rational actual_alpha = r.equilibrium->pne_factor;
      const Rational actual_bound = actual_alpha / (two - actual_alpha);
      expect("bound alpha/(2-alpha)", bound.ToString(),
             actual_bound.ToString());
      expect("ratio >= bound", "yes",
             Yes(r.fairness.pair(1, 0).ef1.AtLeast(actual_bound)));
      break;
    }
    case FixtureId::kOxsEf1: {
      OxsEf1TightnessParams p;
      if (o.eps) {
        std::vector<Rational> values;
        std::stringstream ss(*o.eps);
        std::string item;
        while (std::getline(ss, item, ',')) {
          values.push_back(Rational::Parse(item));
        }
        if (values.size() != 6) {
          throw ParseError("--eps needs six comma-separated rationals");
        }
        std::copy(values.begin(), values.end(), p.eps.begin());
      }
      p.beta = Param(o.beta, p.beta);
      params = "eps = ";
      for (int k = 0; k < 6; ++k) {
        params += (k ? "," : "") + p.eps[k].ToString();
      }
      params += ", beta = " + p.beta.ToString();
      const Instance inst = OxsEf1TightnessInstance(p);
      const RunResult r = RunScenario(inst, OxsEf1TightnessProfile(inst),
                                      "deviating last agent", false);
      text = r.text;
      report["run"] = r.report;
      const Rational one(1), two(2), four(4);
      const Rational alpha = (one + p.eps[0]) / (two * p.beta + p.eps[0]);
      const Rational ratio = (one + p.eps[0]) / (four * p.beta - p.eps[3]);
      const Rational actual_alpha = r.equilibrium->pne_factor;
      const Factor actual_ratio = r.fairness.pair(3, 0).ef1;
      expect("allocation", "{g1,g4,g5}/{g2,g7}/{g3,g9}/{g6,g8}",
             AllocationString(r.allocation));
      expect("alpha", alpha.ToString(), actual_alpha.ToString());
      expect("agent 4 ef1 ratio towards agent 1", ratio.ToString(),
             actual_ratio.ToString());
      expect("ratio >= alpha/3", "yes",
             Yes(actual_ratio.AtLeast(actual_alpha / Rational(3))));
      expect("ratio >= alpha/2 + 1/100", "no",
             Yes(actual_ratio.AtLeast(actual_alpha / two + Rational(1, 100))));
      break;
    }
  }

  const Expectation* first_mismatch = nullptr;
  json jtable = json::array();
  for (const Expectation& e : table) {
    if (!first_mismatch && !e.Matches()) first_mismatch = &e;
    jtable.push_back({{"quantity", e.quantity},
                      {"expected", e.expected},
                      {"actual", e.actual},
                      {"match", e.Matches()}});
  }
  if (flags.json) {
    report["fixture"] = std::string(FixtureName(*id));
    report["parameters"] = params;
    report["checks"] = jtable;
    report["pass"] = first_mismatch == nullptr;
    out << report.dump(2) << "\n";
  } else {
    out << "reproduce " << FixtureName(*id);
    if (!params.empty()) out << " (" << params << ")";
    out << "\n" << text << "\n";
    std::size_t qw = 8, ew = 8, aw = 6;
    for (const Expectation& e : table) {
      qw = std::max(qw, e.quantity.size());
      ew = std::max(ew, e.expected.size());
      aw = std::max(aw, e.actual.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size() + 2, ' ');
    };
    out << pad("quantity", qw) << pad("expected", ew) << pad("actual", aw)
        << "\n";
    for (const Expectation& e : table) {
      out << pad(e.quantity, qw) << pad(e.expected, ew) << pad(e.actual, aw)
          << (e.Matches() ? "PASS" : "FAIL") << "\n";
    }
    if (*id == FixtureId::kNoPne && !first_mismatch) {
      out << "max pne_factor over 576 profiles = 3/4: PASS\n";
    }
  }
  if (first_mismatch) {
    out << "mismatch: " << first_mismatch->quantity << " expected "
        << first_mismatch->expected << ", got " << first_mismatch->actual
        << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Round-Robin equilibria and EF1 verification with exact "
               "rational arithmetic"};
  app.name("rrfair");
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_flag("--json", flags.json, "Machine-readable output");
  app.add_option("--seed", flags.seed, "Seed for sampling and generation");
  app.add_option("--threads", flags.threads, "Worker threads for scans")
      ->check(CLI::Range(1, 256));
  app.add_flag("--require-equilibrium", flags.require_equilibrium,
               "Exit 3 when the equilibrium analysis is skipped by a guard");

  std::string instance_arg;
  std::string profile_source = "bluff";

  CLI::App* run = app.add_subcommand("run", "Run the mechanism on a profile");
  run->add_option("instance", instance_arg,
                  "Instance document, or a fixture name")
      ->required();
  run->add_option("--profile", profile_source,
                  "bluff, truthful, or a profile document path");

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Rebuild a named construction and check "
                                      "its expected values");
  std::string fixture;
  FixtureOverrides overrides;
  reproduce->add_option("fixture", fixture, "prop3, thm4, thm9 or prop10")
      ->required();
  reproduce->add_option("--eps1", overrides.eps1, "thm4 eps1");
  reproduce->add_option("--eps2", overrides.eps2, "thm4 eps2");
  reproduce->add_option("--eps3", overrides.eps3, "thm4 eps3");
  reproduce->add_option("--delta", overrides.delta, "thm9 delta");
  reproduce->add_option("--beta", overrides.beta, "thm9 or prop10 beta");
  reproduce->add_option("--eps", overrides.eps,
                        "prop10 eps1..eps6, comma separated");

  CLI::App* scan = app.add_subcommand("scan", "Analyze many profiles");
  bool exhaustive = false;
  std::uint64_t samples = 0;
  bool quiet = false;
  scan->add_option("instance", instance_arg,
                   "Instance document, or a fixture name")
      ->required();
  auto* ex = scan->add_flag("--exhaustive", exhaustive,
                            "Every profile in lexicographic order (default)");
  scan->add_option("--samples", samples, "Number of seeded random profiles")
      ->excludes(ex);
  scan->add_flag("--quiet", quiet, "Print only the summary");

  CLI::App* certify =
      app.add_subcommand("certify", "Check valuation class certificates");
  certify->add_option("instance", instance_arg,
                      "Instance document, or a fixture name")
      ->required();

  CLI::App* generate =
      app.add_subcommand("generate", "Write a seeded random instance");
  std::string cls;
  int agents = 2, goods = 4, max_weight = 10, max_denominator = 4;
  std::string output;
  generate->add_option("--class", cls,
                       "additive, budget_additive, unit_demand, oxs or "
                       "submodular_table")
      ->required();
  generate->add_option("--agents,-n", agents, "Number of agents");
  generate->add_option("--goods,-m", goods, "Number of goods");
  generate->add_option("--max-weight", max_weight, "Largest weight numerator");
  generate->add_option("--max-denominator", max_denominator,
                       "Largest weight denominator");
  generate->add_option("--output,-o", output, "Write to a file");

  CLI::App* best = app.add_subcommand(
      "best-response", "Exact best response of one agent");
  int agent = 1;
  best->add_option("instance", instance_arg,
                   "Instance document, or a fixture name")
      ->required();
  best->add_option("--agent", agent, "Agent, 1-based")->required();
  best->add_option("--profile", profile_source,
                   "bluff, truthful, or a profile document path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (run->parsed()) return CmdRun(instance_arg, profile_source, flags, out);
    if (reproduce->parsed()) return CmdReproduce(fixture, overrides, flags, out);
    if (scan->parsed()) {
      return CmdScan(instance_arg, exhaustive, samples, quiet, flags, out);
    }
    if (certify->parsed()) return CmdCertify(instance_arg, flags, out);
    if (generate->parsed()) {
      return CmdGenerate(cls, agents, goods, max_weight, max_denominator,
                         output, flags, out);
    }
    if (best->parsed()) {
      return CmdBestResponse(instance_arg, agent, profile_source, flags, out);
    }
  } catch (const SizeGuardExceeded& e) {
    err << "error: size guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CertificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rrfair::cli
