/// @file cli_tests.cpp
/// @brief End-to-end test of the command-line binary: drives every subcommand
/// through a shell, checking exit codes and output texture.  The binary path
/// is injected at build time via TORICG2_CLI_PATH.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

using json = nlohmann::json;

int failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("%s - %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

std::string g_dir;       // scratch directory for fan files and captured output
std::string g_stdout;    // stdout of the most recent run()

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

/// Run the CLI with the given arguments; returns the exit code and leaves
/// captured stdout in g_stdout.
int run(const std::string& args) {
    const std::string out = g_dir + "/out.txt";
    const std::string err = g_dir + "/err.txt";
    const std::string cmd =
        std::string(TORICG2_CLI_PATH) + " " + args + " > " + out + " 2> " + err;
    const int status = std::system(cmd.c_str());
    g_stdout = slurp(out);
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
    char tmpl[] = "/tmp/toricg2-cli-XXXXXX";
    if (mkdtemp(tmpl) == nullptr) {
        std::printf("FAIL - cannot create scratch directory\n");
        return 1;
    }
    g_dir = tmpl;
    const std::string fourfold = g_dir + "/fourfold.json";
    const std::string dfold4 = g_dir + "/dfold4.json";
    const std::string f2 = g_dir + "/f2.json";

    // --- catalog ------------------------------------------------------------
    check(run("--version") == 0 && contains(g_stdout, "1.0.0"), "--version");
    check(run("catalog list") == 0 && contains(g_stdout, "terminal-fano-4fold") &&
              contains(g_stdout, "hirzebruch <param>"),
          "catalog list names every entry");
    check(run("catalog emit terminal-fano-4fold -o " + fourfold) == 0 &&
              json::parse(slurp(fourfold)).at("format") == "fan/1",
          "catalog emit writes a fan file");
    check(run("catalog emit terminal-fano-dfold --param 4 -o " + dfold4) == 0,
          "catalog emit with parameter");
    check(run("catalog emit hirzebruch --param 2 -o " + f2) == 0,
          "catalog emit hirzebruch 2");
    check(run("catalog emit weighted-p2-112") == 0 &&
              contains(g_stdout, "\"format\": \"fan/1\""),
          "catalog emit to stdout");
    check(run("catalog emit projective-space") == 2,
          "missing parameter is an input error");
    check(run("catalog emit no-such-fan") == 2, "unknown catalog name");

    // --- check --------------------------------------------------------------
    check(run("check " + fourfold) == 0 &&
              contains(g_stdout, "rho = 2") &&
              contains(g_stdout, "terminal, not Gorenstein (index 6)") &&
              contains(g_stdout, "fano: yes") &&
              contains(g_stdout, "gamma2 verdict: positive"),
          "check human report on the fourfold");
    const int jc1 = run("check " + fourfold + " --json");
    const std::string first = g_stdout;
    const int jc2 = run("check " + fourfold + " --json");
    check(jc1 == 0 && jc2 == 0 && first == g_stdout, "check --json is deterministic");
    {
        const json j = json::parse(first);
        check(j.at("schema") == "toricg2/check/1" &&
                  j.at("gamma2").at("entries").size() == 3 &&
                  j.at("gamma2").at("entries")[1].at("value") == "8",
              "check --json carries the quad value");
    }
    check(run("check " + f2) == 0 && contains(g_stdout, "nef-not-positive"),
          "nef-but-not-positive surface still exits 0");
    check(run("check " + g_dir + "/missing.json") == 2, "unreadable file");
    spit(g_dir + "/truncated.json", "{\"format\": \"fan/1\", \"dim\": 2");
    check(run("check " + g_dir + "/truncated.json") == 2, "malformed JSON");
    spit(g_dir + "/incomplete.json",
         R"({"format":"fan/1","dim":2,"rays":[[1,0],[0,1],[-1,-1]],)"
         R"("max_cones":[[0,1],[1,2]]})");
    check(run("check " + g_dir + "/incomplete.json") == 2, "non-complete fan");
    check(run("check " + g_dir + "/incomplete.json --json") == 2 &&
              json::parse(g_stdout).at("structure").at("valid") == false,
          "check --json reports validation errors");

    // --- gamma2 -------------------------------------------------------------
    check(run("gamma2 " + fourfold + " --tau 4,5") == 0 &&
              contains(g_stdout, "cone(x5,x6) = 8 (sign 1)"),
          "gamma2 on the distinguished quadrilateral");
    check(run("gamma2 " + fourfold + " --tau 0,1") == 2,
          "triangle star is an unsupported request");
    check(run("gamma2 " + fourfold + " --tau 4,x") == 2, "bad --tau syntax");
    {
        const int rc = run("gamma2 " + fourfold + " --tau 5,4 --json");
        const json j = json::parse(g_stdout);
        check(rc == 0 && j.at("tau") == json::array({4, 5}) &&
                  j.at("value") == "8" && j.at("sign") == 1,
              "gamma2 --json sorts tau and keeps exact value");
    }

    // --- ne2 ----------------------------------------------------------------
    {
        const int rc = run("ne2 " + dfold4 + " --json");
        const json j = json::parse(g_stdout);
        check(rc == 0 && j.at("s1").is_null() &&
                  j.at("s2") == json::array({1, 2}) &&
                  j.at("s3") == json::array({2, 4}) &&
                  j.at("relation_x") == "x1 + x2 + x3 + 2*x4 = 0",
              "ne2 --json on the 4-dimensional family member");
    }
    check(run("ne2 " + dfold4) == 0 && contains(g_stdout, "S1: absent"),
          "ne2 human output marks absent generators");
    check(run("catalog emit projective-space --param 3 -o " + g_dir + "/p3.json") == 0 &&
              run("ne2 " + g_dir + "/p3.json") == 2,
          "ne2 rejects Picard number 1");

    // --- surface ------------------------------------------------------------
    check(run("surface " + f2) == 0 && contains(g_stdout, "D_2^2 = -2") &&
              contains(g_stdout, "gamma2 = 0 (sign 0)"),
          "surface self-intersection table");
    check(run("surface " + fourfold) == 2, "surface rejects higher dimension");

    // --- verify -------------------------------------------------------------
    check(run("verify-paper") == 0 && contains(g_stdout, "PASS  C1"),
          "built-in verification suite passes");

    std::printf("%s (%d failure%s)\n", failures == 0 ? "all cli tests passed" : "cli tests FAILED",
                failures, failures == 1 ? "" : "s");
    return failures == 0 ? 0 : 1;
}
