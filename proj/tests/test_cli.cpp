// Exercises the command-line tool end to end: exit codes, file outputs, and
// the byte-determinism contract. Takes the binary path as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "xycirc/circuit.hpp"
#include "xycirc/model.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "ok " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

int run(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-xycirc>\n";
        return 2;
    }
    const std::string bin = argv[1];
    const fs::path work = fs::temp_directory_path() / "xycirc_cli_test";
    fs::remove_all(work);
    fs::create_directories(work);
    const std::string out = " --out " + work.string();

    expect(run(bin + " spectrum --n 4 --lambda 1 --gamma 1" + out + " > /dev/null") == 0,
           "spectrum exits 0");
    {
        std::ifstream in(work / "spectrum.csv");
        std::string line;
        int rows = 0;
        bool header = false;
        while (std::getline(in, line)) {
            if (rows == 0) header = line == "index,energy";
            ++rows;
        }
        expect(header && rows == 17, "spectrum.csv has a header and 16 levels");
        expect(fs::exists(work / "spectrum_manifest.json"), "manifest emitted");
    }

    expect(run(bin + " evolve --n 8 --lambda 1 --gamma 1 --bogus" + out +
               " 2> /dev/null") == 2,
           "unknown flag exits 2");
    expect(run(bin + " frobnicate 2> /dev/null") == 2, "unknown subcommand exits 2");
    expect(run(bin + " spectrum --n 5" + out + " 2> /dev/null") == 2,
           "odd chain length exits 2");

    // determinism: identical configuration gives identical bytes
    expect(run(bin + " evolve --n 4 --times 0:2:5" + out + " > /dev/null") == 0,
           "evolve exits 0");
    const std::string first = slurp(work / "evolve.csv");
    expect(run(bin + " evolve --n 4 --times 0:2:5" + out + " > /dev/null") == 0,
           "evolve reruns");
    expect(!first.empty() && first == slurp(work / "evolve.csv"),
           "evolve output is byte-identical across runs");

    expect(run(bin + " rg --n 8 --cutoff 0.25 --times 0:1:3" + out + " > /dev/null") ==
               0,
           "rg exits 0");
    expect(run(bin + " tfd --n 4 --beta 1" + out + " > /dev/null") == 0,
           "tfd exits 0");
    expect(run(bin + " entropy --n 8" + out + " > /dev/null") == 0, "entropy exits 0");

    expect(run(bin + " spectrum --n 2 --format json" + out + " > /dev/null") == 0,
           "json format exits 0");
    {
        const std::string payload = slurp(work / "spectrum.json");
        expect(payload.find("\"columns\"") != std::string::npos &&
                   payload.find("\"rows\"") != std::string::npos,
               "json payload carries columns and rows");
    }

    const fs::path envdir = work / "env_out";
    expect(run("XYCIRC_OUTPUT_DIR=" + envdir.string() + " " + bin +
               " spectrum --n 2 > /dev/null") == 0 &&
               fs::exists(envdir / "spectrum.csv"),
           "output directory honors the environment variable");

    expect(run(bin + " export-circuit --circuit udis --n 4" + out + " > /dev/null") == 0,
           "export-circuit exits 0");
    {
        const std::string text = slurp(work / "udis.circuit");
        bool parsed = false;
        try {
            const xyc::Circuit c = xyc::parse_circuit(text);
            parsed = c.num_qubits == 4 && !c.ops.empty();
        } catch (...) {
        }
        expect(parsed, "exported circuit parses back");
    }

    expect(run(bin + " verify > " + (work / "verify.log").string()) == 0,
           "verify exits 0 on a correct build");
    {
        const std::string log = slurp(work / "verify.log");
        expect(log.find("FAIL") == std::string::npos &&
                   log.find("PASS") != std::string::npos,
               "verify reports per-criterion lines");
    }

    std::printf("%s\n", failures == 0 ? "CLI SUITE PASS" : "CLI SUITE FAIL");
    return failures == 0 ? 0 : 1;
}
