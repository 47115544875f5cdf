// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 11 (byte-identical repeated verification output) shells out to
// the CLI, whose path arrives via --cli.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gaborpair/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    bool all_pass = true;
    const std::vector<gaborpair::Criterion> criteria = gaborpair::verify_all();
    for (const auto& c : criteria) {
        std::printf("criterion %2d  %-28s %s  (%.2f s)\n", c.id, c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.seconds);
        if (!c.pass) {
            all_pass = false;
            for (const auto& chk : c.report.checks)
                if (!chk.pass)
                    std::printf("    failed: %s  value %.6e  tol %.3e\n",
                                chk.check.c_str(), chk.value, chk.tolerance);
        }
    }

    if (cli_path.empty()) {
        std::printf("criterion 11  %-28s SKIP (no --cli path)\n", "Determinism");
        all_pass = false;
    } else {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "gaborpair_determinism";
        fs::create_directories(dir);
        const std::string j1 = (dir / "run1.json").string();
        const std::string j2 = (dir / "run2.json").string();
        const std::string base = "\"" + cli_path + "\" verify all --json ";
        const int rc1 = std::system((base + "\"" + j1 + "\" > /dev/null").c_str());
        const int rc2 = std::system((base + "\"" + j2 + "\" > /dev/null").c_str());
        const std::string b1 = slurp(j1);
        const std::string b2 = slurp(j2);
        const bool pass = rc1 == 0 && rc2 == 0 && !b1.empty() && b1 == b2;
        std::printf("criterion 11  %-28s %s\n", "Determinism", pass ? "PASS" : "FAIL");
        all_pass = all_pass && pass;
    }

    return all_pass ? 0 : 1;
}
