// Runs the full verification suite through the mprange binary twice with the
// same seed. Criteria 1-10 are read from the first report; criterion 11 is
// byte equality of the two reports.

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string run_verify_all(const std::string& seed, const fs::path& out) {
  fs::create_directories(out);
  const std::string cmd = std::string("\"") + MPRANGE_PATH + "\" --out \"" + out.string() + "\" verify-all --profile full --seed " + seed;
  const int rc = std::system(cmd.c_str());
  std::cerr << "mprange verify-all exited with status " << rc << "\n";
  std::ifstream in(out / "verify-all.json", std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string seed = argc > 1 ? argv[1] : "7";
  const fs::path work = fs::temp_directory_path() / ("mpr_acceptance_" + seed);
  fs::remove_all(work);

  const std::string first = run_verify_all(seed, work / "a");
  const std::string second = run_verify_all(seed, work / "b");

  bool all = true;
  const auto line = [&](int id, const std::string& name, bool pass) {
    std::cout << "criterion " << id << " " << name << ": " << (pass ? "PASS" : "FAIL") << "\n";
    all = all && pass;
  };

  nlohmann::json report;
  if (!first.empty()) report = nlohmann::json::parse(first, nullptr, false);
  for (int id = 1; id <= 10; ++id) {
    const nlohmann::json* check = nullptr;
    if (report.is_object())
      for (const auto& c : report["checks"])
        if (c["id"] == id) check = &c;
    if (!check) {
      line(id, "missing", false);
      continue;
    }
    const bool pass = (*check)["pass"].get<bool>();
    line(id, (*check)["name"].get<std::string>(), pass);
    if (!pass)
      for (const auto& n : (*check)["notes"]) std::cout << "  " << n.get<std::string>() << "\n";
  }
  line(11, "determinism", !first.empty() && first == second);

  fs::remove_all(work);
  return all ? 0 : 1;
}
