// Copyright (c) cascopt contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exit-code contract of the command line tool: 0 success, 1 usage error,
// 2 validation failure. Takes the binary path as argv[1].

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int run(const std::string& cmd) {
    int rc = std::system((cmd + " > /dev/null 2> /dev/null").c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

int check(const std::string& what, int got, int expect) {
    if (got == expect) {
        std::cout << "ok: " << what << " -> " << got << "\n";
        return 0;
    }
    std::cout << "FAIL: " << what << " -> " << got << " (expected " << expect << ")\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cout << "usage: test_cli_errors <cascopt-binary>\n";
        return 1;
    }
    std::string tool = argv[1];
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "cascopt_cli_errors";
    fs::create_directories(dir);

    int failures = 0;
    failures += check("unknown flag", run(tool + " gen figure2 --nope"), 1);
    failures += check("missing subcommand", run(tool), 1);
    failures += check("missing input file",
                      run(tool + " sample --instance " + (dir / "nope.json").string() +
                          " --n 1 --seed 1"),
                      1);

    {
        std::ofstream bad(dir / "bad.json");
        bad << "{\"nodes\": 2, \"edges\": [[0, 1, 1.5]], \"base_nodes\": [0, 1], "
               "\"actions\": [], \"sources\": [0], \"rewards\": [[1, 1.0]], \"budget\": 1.0}";
    }
    failures += check("invalid instance (probability out of range)",
                      run(tool + " sample --instance " + (dir / "bad.json").string() +
                          " --n 1 --seed 1"),
                      2);

    failures += check("valid pipeline",
                      run(tool + " gen figure2 --c 5 --budget 2 --out " +
                          (dir / "ok.json").string()),
                      0);
    failures += check("solve on the valid instance",
                      run(tool + " solve saa --instance " + (dir / "ok.json").string() +
                          " --budget 2 --m 1 --n 1 --n-valid 2 --n-test 2 --seed 1 --out " +
                          (dir / "rep.json").string()),
                      0);
    failures += check("single-replication MPS export",
                      run(tool + " solve saa --instance " + (dir / "ok.json").string() +
                          " --budget 2 --m 1 --n 1 --n-valid 2 --n-test 2 --seed 1"
                          " --export-mps " + (dir / "one.mps").string() + " --out " +
                          (dir / "rep.json").string()),
                      0);
    failures += check("exported file exists under the exact name",
                      fs::exists(dir / "one.mps") ? 0 : 1, 0);
    {
        std::ofstream strat(dir / "wrong.json");
        strat << "{\"n_actions\": 2, \"purchased\": [0], \"cost\": 1.0}";
    }
    failures += check("strategy/instance dimension mismatch",
                      run(tool + " evaluate --instance " + (dir / "ok.json").string() +
                          " --strategy " + (dir / "wrong.json").string() +
                          " --n-test 2 --seed 1"),
                      2);

    fs::remove_all(dir);
    return failures;
}
