// ec: exact computations with extreme contractions between polygonal
// Banach spaces. All results go to stdout as JSON; diagnostics to stderr.
//
// Exit codes: 0 success / property holds, 1 property fails (or NotExtreme
// under --expect-extreme), 2 input or computation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ec/ec.hpp"

namespace {

constexpr std::size_t kInlineViolationLimit = 20;

unsigned thread_cap() {
  const char* env = std::getenv("EC_THREADS");
  if (!env || !*env) return 0;  // hardware default
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0')
    ec::fail(ec::errc::parse_error, "EC_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

void emit(const ec::Json& j) { std::cout << j.dump(2) << "\n"; }

std::string sanitize(const std::string& name) {
  std::string out;
  for (char c : name)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  return out.empty() ? std::string("space") : out;
}

int run_norm(const std::string& op_ref) {
  ec::Operator t = ec::resolve_operator(op_ref);
  ec::Json j;
  j["norm"] = t.op_norm().str();
  if (!t.is_zero()) {
    ec::Json att = ec::Json::array();
    for (const ec::Vec& x : t.attainment_set()) att.push_back(ec::vec_to_json(x));
    j["attainment"] = att;
  }
  emit(j);
  return 0;
}

int run_extremal(const std::string& op_ref, bool expect_extreme) {
  ec::Operator t = ec::resolve_operator(op_ref);
  ec::Certificate cert = ec::is_extreme(t);
  ec::Json j = ec::certificate_to_json(cert);
  ec::WeakLpResult w = ec::weak_lp_holds(t);
  j["weak_lp"] = ec::Json{{"holds", w.holds},
                          {"witness", w.witness ? ec::vec_to_json(*w.witness) : ec::Json()}};
  j["lp_image"] = ec::lp_image_check(t);
  if (t.op_norm() == ec::Scalar(1)) j["span"] = ec::span_check(t);
  j["certificate_checked"] = ec::check_certificate(t, cert);
  emit(j);
  return (expect_extreme && !cert.is_extreme()) ? 1 : 0;
}

int run_enumerate(const std::string& domain, const std::string& codomain,
                  bool count_only, bool oracle) {
  auto ball = ec::build_ball(ec::resolve_space(domain), ec::resolve_space(codomain));
  ec::VertexSet vs = ec::enumerate_vertices(ball);
  ec::Json j = ec::vertex_set_to_json(vs, count_only);
  if (oracle) {
    ec::VertexSet bf = ec::brute_force_vertices(ball);
    j["oracle_count"] = bf.count();
    j["oracle_agrees"] = (vs == bf);
    if (!(vs == bf)) {
      // Never trust either side silently: report the symmetric difference
      // with a certificate per disputed operator.
      auto disputed = [&](const ec::VertexSet& in, const ec::VertexSet& not_in) {
        ec::Json out = ec::Json::array();
        for (const ec::Operator& v : in.vertices) {
          if (not_in.contains(v)) continue;
          ec::Json item;
          item["matrix"] = ec::mat_to_json(v.matrix());
          item["certificate"] = ec::certificate_to_json(ec::is_extreme(v));
          out.push_back(item);
        }
        return out;
      };
      ec::Json err;
      err["error"] = ec::Json{
          {"kind", ec::errc_name(ec::errc::falsification)},
          {"message", "double description and brute force disagree on (" + domain +
                          ", " + codomain + ")"},
          {"dd_count", vs.count()},
          {"oracle_count", bf.count()},
          {"only_in_dd", disputed(vs, bf)},
          {"only_in_oracle", disputed(bf, vs)}};
      emit(err);
      return 2;
    }
  }
  emit(j);
  return 0;
}

int run_audit(const std::string& domain, const std::string& codomain,
              const std::string& property) {
  ec::Property prop;
  if (property == "weak-lp")
    prop = ec::Property::weak_lp;
  else if (property == "lp")
    prop = ec::Property::lp;
  else
    ec::fail(ec::errc::parse_error, "property must be weak-lp or lp");

  auto x = ec::resolve_space(domain);
  auto y = ec::resolve_space(codomain);
  ec::AuditReport rep = ec::audit_pair(x, y, prop, thread_cap());
  ec::Json j = ec::audit_report_to_json(rep, kInlineViolationLimit);
  if (rep.violations.size() > kInlineViolationLimit) {
    std::string path = sanitize(rep.domain) + "_" + sanitize(rep.codomain) + "_" +
                       ec::property_name(prop) + ".violations.json";
    std::ofstream out(path);
    out << ec::audit_report_to_json(rep).dump(2) << "\n";
    j["violations_file"] = path;
    std::cerr << "full violation list written to " << path << "\n";
  }
  emit(j);
  return rep.holds ? 0 : 1;
}

int run_lemma(int m, long long k, const std::string& claim) {
  ec::Claim c;
  if (claim == "i")
    c = ec::Claim::i;
  else if (claim == "ii")
    c = ec::Claim::ii;
  else
    ec::fail(ec::errc::parse_error, "claim must be i or ii");
  ec::LemmaReport rep = ec::lemma_check(m, k, c);
  emit(ec::lemma_report_to_json(rep));
  return rep.holds ? 0 : 1;
}

int run_catalog(const std::string& action, const std::string& name) {
  if (action == "list") {
    ec::Json j;
    j["spaces"] = ec::catalog::space_names();
    j["operators"] = ec::catalog::operator_names();
    emit(j);
    return 0;
  }
  if (action == "show") {
    for (const std::string& s : ec::catalog::space_names()) {
      if (s == name) {
        ec::Json j = ec::space_to_json(*ec::catalog::get_space(name));
        j["note"] = ec::catalog::space_note(name);
        emit(j);
        return 0;
      }
    }
    for (const std::string& s : ec::catalog::operator_names()) {
      if (s == name) {
        ec::Json j = ec::operator_to_json(ec::catalog::get_operator(name));
        j["note"] = ec::catalog::operator_note(name);
        emit(j);
        return 0;
      }
    }
    ec::fail(ec::errc::unknown_name, "no catalog entry named " + name);
  }
  ec::fail(ec::errc::parse_error, "catalog action must be list or show");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extreme-contraction toolkit for polygonal Banach spaces"};
  app.require_subcommand(1);

  std::string op_ref, domain, codomain, property = "weak-lp", claim = "i";
  std::string catalog_action, catalog_name;
  bool count_only = false, oracle = false, expect_extreme = false;
  int lemma_m = 2;
  long long lemma_k = 3;

  auto* norm = app.add_subcommand("norm", "exact operator norm and attainment set");
  norm->add_option("--operator", op_ref, "operator file or catalog:NAME")->required();

  auto* extremal = app.add_subcommand("extremal", "extremality certificate for a contraction");
  extremal->add_option("--operator", op_ref, "operator file or catalog:NAME")->required();
  extremal->add_flag("--expect-extreme", expect_extreme,
                     "exit 1 when the verdict is NotExtreme");

  auto* enumerate = app.add_subcommand("enumerate", "all extreme contractions of L(X, Y)");
  enumerate->add_option("--domain", domain, "space name or file")->required();
  enumerate->add_option("--codomain", codomain, "space name or file")->required();
  enumerate->add_flag("--count-only", count_only, "emit only the vertex count");
  enumerate->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");

  auto* audit = app.add_subcommand("audit", "property audit over all extreme contractions");
  audit->add_option("--domain", domain, "space name or file")->required();
  audit->add_option("--codomain", codomain, "space name or file")->required();
  audit->add_option("--property", property, "weak-lp or lp")->required();

  auto* lemma = app.add_subcommand("lemma", "exhaustive support-family combinatorics check");
  lemma->add_option("--m", lemma_m, "universe size (2..4)")->required();
  lemma->add_option("--k", lemma_k, "family size")->required();
  lemma->add_option("--claim", claim, "i or ii")->required();

  auto* cat = app.add_subcommand("catalog", "built-in spaces and operators");
  cat->add_option("action", catalog_action, "list or show")->required();
  cat->add_option("name", catalog_name, "entry name for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ec::Json j;
    j["error"] = ec::Json{{"kind", "ParseError"}, {"message", e.what()}};
    emit(j);
    return 2;
  }

  try {
    if (norm->parsed()) return run_norm(op_ref);
    if (extremal->parsed()) return run_extremal(op_ref, expect_extreme);
    if (enumerate->parsed()) return run_enumerate(domain, codomain, count_only, oracle);
    if (audit->parsed()) return run_audit(domain, codomain, property);
    if (lemma->parsed()) return run_lemma(lemma_m, lemma_k, claim);
    if (cat->parsed()) return run_catalog(catalog_action, catalog_name);
  } catch (const ec::error& e) {
    ec::Json j;
    j["error"] = ec::Json{{"kind", ec::errc_name(e.code())}, {"message", e.message()}};
    emit(j);
    return 2;
  } catch (const std::exception& e) {
    ec::Json j;
    j["error"] = ec::Json{{"kind", "InternalError"}, {"message", e.what()}};
    emit(j);
    return 2;
  }
  return 2;
}
