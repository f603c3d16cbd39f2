// End-to-end checks of the installed-style CLI: spawns the real binary
// (path injected at compile time) and inspects exit codes and artifacts.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << '\n';
    if (!ok) ++g_failures;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string(RABIWAVE_CLI_PATH) + " " + args + " 2>&1";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    CommandResult r;
    r.output = out;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    const fs::path work = fs::temp_directory_path() / "rabiwave_cli_test";
    fs::remove_all(work);
    fs::create_directories(work);

    {
        const CommandResult r = run_cli("scenarios");
        check(r.exit_code == 0, "scenarios exits 0");
        check(r.output.find("fig1") != std::string::npos &&
                  r.output.find("twolevel") != std::string::npos &&
                  r.output.find("resonant") != std::string::npos,
              "scenarios lists the bundled names");
    }

    {
        const CommandResult r = run_cli("validate twolevel");
        check(r.exit_code == 0 && r.output.find("ok") != std::string::npos,
              "validate accepts a bundled scenario");

        const fs::path bad = work / "bad.cfg";
        std::ofstream(bad) << "n_chains = 0\n";
        const CommandResult rb = run_cli("validate " + bad.string());
        check(rb.exit_code == 2, "validate rejects a broken config with exit 2");
        check(rb.output.find("invalid config") != std::string::npos,
              "validate names the problem");
    }

    {
        const fs::path out = work / "twolevel_out";
        const CommandResult r =
            run_cli("run twolevel --t-end 5 --out " + out.string());
        check(r.exit_code == 0, "run twolevel exits 0");
        check(fs::exists(out / "inversion.csv") && fs::exists(out / "norm.csv") &&
                  fs::exists(out / "manifest.json"),
              "run writes inversion, norm and manifest");
        check(r.output.find("inversion.csv") != std::string::npos,
              "run prints its artifact paths");

        const std::string inv = slurp(out / "inversion.csv");
        check(inv.rfind("t,value", 0) == 0, "inversion.csv has the t,value header");

        const fs::path spec = work / "spec.csv";
        const CommandResult rs = run_cli("spectrum " + (out / "inversion.csv").string() +
                                         " " + spec.string() + " --window hann");
        check(rs.exit_code == 0, "spectrum subcommand exits 0");
        check(slurp(spec).rfind("omega,amplitude", 0) == 0,
              "spectrum.csv has the omega,amplitude header");
    }

    {
        const CommandResult r = run_cli("run no_such_thing --out " +
                                        (work / "none").string());
        check(r.exit_code == 2, "unknown config exits 2");
        check(r.output.find("error") != std::string::npos, "failure is reported");
    }

    {
        const CommandResult r = run_cli("frobnicate");
        check(r.exit_code != 0, "unknown subcommand fails");
    }

    fs::remove_all(work);
    if (g_failures) {
        std::cout << g_failures << " failing check(s)\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
