#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vdyn/render.hpp"
#include "vdyn/serialize.hpp"
#include "vdyn/verify.hpp"

namespace {

using namespace vdyn;

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

struct Common {
  std::size_t max_elements = 5'000'000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool all_checks(const OrbitReport& r) {
  return std::all_of(r.checks.begin(), r.checks.end(), [](const auto& kv) { return kv.second; });
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::kIo, "cannot write '" + out + "'");
}

template <class T>
Json elements_json(const std::vector<T>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

int run_enumerate(const std::string& object, int ell, int q, std::optional<int> k, bool count_only,
                  const Common& c) {
  Json params = {{"ell", ell}, {"q", q}};
  Json elements;
  std::size_t count = 0;
  if (object == "linext") {
    const auto xs = linear_extensions(v_times_chain(ell), c.max_elements);
    count = xs.size();
    if (!count_only) elements = elements_json(xs);
  } else if (object == "labelings") {
    const auto xs = enumerate_labelings(ell, q, c.max_elements);
    count = xs.size();
    if (!count_only) elements = elements_json(xs);
  } else if (object == "words") {
    const auto xs = enumerate_words(ell, q, c.max_elements);
    count = xs.size();
    if (!count_only) elements = elements_json(xs);
  } else {
    const int chain = k.value_or(q - 2);
    params["k"] = chain;
    const auto xs = enumerate_ppartitions(v_times_chain(chain), ell, c.max_elements);
    count = xs.size();
    if (!count_only) elements = elements_json(xs);
  }
  Json out = {{"object", object}, {"params", params}, {"count", count}};
  if (!count_only) out["elements"] = elements;
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_render(const std::string& input, const std::string& format, const std::string& out) {
  const auto fmt = parse_render_format(format);
  const std::string text = trim(read_file(input));
  std::string rendered;
  if (!text.empty() && text.front() == '{') {
    rendered = render_diagram(word_from_json(Json::parse(text)), fmt);
  } else if (text.find_first_of("|[") != std::string::npos || text.find("\xE2\x88\x85") != std::string::npos) {
    rendered = render_diagram(MultiKrewerasWord::parse(text), fmt);
  } else {
    rendered = render_diagram(KrewerasWord::parse(text), fmt);
  }
  emit(rendered, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Promotion, rowmotion and Kreweras-word dynamics on V x [n]"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--max-elements", common.max_elements, "Ceiling on enumerated elements per claim")
      ->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List a combinatorial family as JSON");
  std::string object;
  int ell = 1, q = 3;
  std::optional<int> k;
  bool count_only = false;
  enumerate->add_option("--object", object)->required()->check(
      CLI::IsMember({"linext", "labelings", "words", "ppartitions"}));
  enumerate->add_option("--ell", ell)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--q", q, "Label bound (unused for linext)");
  enumerate->add_option("--k", k, "Chain length for ppartitions (default q-2)");
  enumerate->add_flag("--count", count_only, "Print only the count");

  auto* orbits = app.add_subcommand("orbits", "Orbit structure of an action");
  std::string action, format = "json", out;
  orbits->add_option("--action", action)->required()->check(CLI::IsMember(action_names()));
  orbits->add_option("--ell", ell)->required();
  orbits->add_option("--q", q)->required();
  orbits->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<int> ell_max, q_max;
  unsigned threads = 0;
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--ell-max", ell_max);
  verify->add_option("--q-max", q_max);
  verify->add_option("--threads", threads);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* render = app.add_subcommand("render", "Draw the bump diagram of a word");
  std::string input;
  render->add_option("--input", input, "File holding a word (text or JSON)")->required();
  render->add_option("--format", format)->required()->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out);

  auto* exporter = app.add_subcommand("export", "Write a suite or orbit report to a file");
  exporter->add_option("--out", out)->required();
  exporter->add_option("--format", format)->required()->check(CLI::IsMember({"json", "csv"}));
  auto* ex_suite = exporter->add_option("--suite", suite)->check(CLI::IsMember(suites));
  auto* ex_action = exporter->add_option("--action", action)->check(CLI::IsMember(action_names()));
  ex_suite->excludes(ex_action);
  exporter->add_option("--ell", ell);
  exporter->add_option("--q", q);
  exporter->add_option("--ell-max", ell_max);
  exporter->add_option("--q-max", q_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return run_enumerate(object, ell, q, k, count_only, common);

    if (*orbits) {
      const auto r = orbit_report(action, ell, q, common.max_elements);
      std::cout << (format == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n");
      return all_checks(r) ? kOk : kClaimFailed;
    }

    SuiteOptions options{ell_max, q_max, common.max_elements, threads};
    if (*verify) {
      const auto r = run_suite(suite, options);
      std::cout << (format == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n");
      return r.passed() ? kOk : kClaimFailed;
    }

    if (*render) return run_render(input, format, out);

    if (*exporter) {
      const auto fmt = parse_report_format(format);
      if (!suite.empty()) {
        const auto r = run_suite(suite, options);
        export_report(r, out, fmt);
        return r.passed() ? kOk : kClaimFailed;
      }
      if (action.empty()) throw CLI::RequiredError("--suite or --action");
      const auto r = orbit_report(action, ell, q, common.max_elements);
      export_report(r, out, fmt);
      return all_checks(r) ? kOk : kClaimFailed;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
