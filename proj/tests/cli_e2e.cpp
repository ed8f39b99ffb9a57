// End-to-end driver for the command line tool: generates instances, pipes
// them through construct/verify/bounds/exact/simulate, and checks exit codes
// and reproducibility.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

std::string tmpdir;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << '\n';
    }
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string bin() { return std::string(PATHSEP_BIN); }

std::string at(const std::string& name) { return tmpdir + "/" + name; }

} // namespace

int main() {
    char tmpl[] = "/tmp/pathsep_e2e_XXXXXX";
    if (!mkdtemp(tmpl)) {
        std::cerr << "cannot create temp dir\n";
        return 1;
    }
    tmpdir = tmpl;

    expect(run(bin() + " gen complete 12 -o " + at("k12.g")) == 0, "gen complete");
    expect(run(bin() + " gen hypercube 3 -o " + at("q3.g")) == 0, "gen hypercube");
    expect(run(bin() + " gen tree 30 --seed 5 -o " + at("t30.g")) == 0, "gen tree");
    expect(run(bin() + " gen gnp 40 0.3 --seed 9 -o " + at("g40.g")) == 0, "gen gnp");
    expect(run(bin() + " gen path 4 -o " + at("p4.g")) == 0, "gen path");

    // construct (auto picks the right method) and verify via exit status
    expect(run(bin() + " construct " + at("k12.g") + " -o " + at("k12.f") +
               " --json > " + at("k12.json")) == 0,
           "construct complete");
    expect(run(bin() + " verify " + at("k12.g") + " " + at("k12.f") + " > /dev/null") == 0,
           "verify complete family");
    expect(slurp(at("k12.json")).find("\"method\": \"complete\"") != std::string::npos,
           "auto detection complete");

    expect(run(bin() + " construct " + at("q3.g") + " -o " + at("q3.f") + " --json > " +
               at("q3.json")) == 0,
           "construct hypercube");
    expect(run(bin() + " verify " + at("q3.g") + " " + at("q3.f") + " > /dev/null") == 0, "verify hypercube");
    expect(slurp(at("q3.json")).find("\"method\": \"hypercube\"") != std::string::npos,
           "auto detection hypercube");

    expect(run(bin() + " construct " + at("t30.g") + " -o " + at("t30.f") + " > /dev/null") == 0,
           "construct forest");
    expect(run(bin() + " verify " + at("t30.g") + " " + at("t30.f") + " > /dev/null") == 0, "verify forest");

    // without -o the family owns stdout and the report goes to stderr
    expect(run(bin() + " construct " + at("t30.g") + " 2> /dev/null > " + at("t30pipe.f")) == 0,
           "construct to stdout");
    expect(slurp(at("t30pipe.f")) == slurp(at("t30.f")), "piped family identical");

    expect(run(bin() + " construct --method general " + at("g40.g") + " -o " + at("g40.f") +
               " > /dev/null") == 0,
           "construct general");
    expect(run(bin() + " verify " + at("g40.g") + " " + at("g40.f") + " > /dev/null") == 0, "verify general");

    expect(run(bin() + " construct --method gnp --p 0.3 --seed 3 " + at("g40.g") + " -o " +
               at("g40gnp.f") + " > /dev/null") == 0,
           "construct gnp");
    expect(run(bin() + " verify " + at("g40.g") + " " + at("g40gnp.f") + " > /dev/null") == 0, "verify gnp");

    // a non-separator must fail verification
    {
        std::ofstream bad(at("bad.f"));
        bad << "0 1 2 3\n";
    }
    expect(run(bin() + " verify " + at("p4.g") + " " + at("bad.f") + " > /dev/null") != 0,
           "verify rejects non-separator");

    // byte-identical reproducibility under a fixed seed
    expect(run(bin() + " construct --method complete --seed 11 " + at("k12.g") + " -o " +
               at("a.f") + " > /dev/null") == 0,
           "construct seed run 1");
    expect(run(bin() + " construct --method complete --seed 11 " + at("k12.g") + " -o " +
               at("b.f") + " > /dev/null") == 0,
           "construct seed run 2");
    expect(slurp(at("a.f")) == slurp(at("b.f")), "seeded construct is reproducible");
    expect(!slurp(at("a.f")).empty(), "family file nonempty");
    expect(run(bin() + " construct --method gnp --p 0.3 --seed 3 " + at("g40.g") + " -o " +
               at("g40gnp2.f") + " > /dev/null") == 0,
           "construct gnp again");
    expect(slurp(at("g40gnp.f")) == slurp(at("g40gnp2.f")),
           "seeded gnp construct is reproducible");

    // bounds / exact / simulate
    expect(run(bin() + " bounds " + at("q3.g") + " > " + at("q3.b")) == 0, "bounds");
    expect(slurp(at("q3.b")).find("hypercube") != std::string::npos, "bounds hypercube row");
    expect(run(bin() + " exact " + at("p4.g") + " > " + at("p4.x")) == 0, "exact");
    expect(slurp(at("p4.x")).find("psn = 3") != std::string::npos, "exact P_4 value");
    expect(run(bin() + " simulate " + at("q3.g") + " " + at("q3.f") + " --json > " +
               at("sim.json")) == 0,
           "simulate");
    expect(slurp(at("sim.json")).find("\"no_fault_ok\": true") != std::string::npos,
           "simulate no-fault");
    expect(run(bin() + " simulate " + at("q3.g") + " " + at("q3.f") + " --fail none > /dev/null") == 0,
           "simulate single no-fault");
    expect(run(bin() + " bench quick > " + at("bench.txt")) == 0, "bench quick");
    expect(slurp(at("bench.txt")).find("petersen") != std::string::npos, "bench table");

    // exact-solver guard and its environment override
    expect(run(bin() + " gen cycle 4 -o " + at("c4.g")) == 0, "gen cycle 4");
    expect(run(bin() + " exact " + at("c4.g") + " > " + at("c4.x")) == 0,
           "exact within default guard");
    expect(slurp(at("c4.x")).find("psn = 4") != std::string::npos, "psn(C_4) = 4");
    expect(run("PATHSEP_MAX_EXACT_EDGES=3 " + bin() + " exact " + at("c4.g") +
               " 2> " + at("guard.txt")) != 0,
           "lowered guard rejects the instance");
    expect(slurp(at("guard.txt")).find("size guard") != std::string::npos,
           "guard error message");

    // parse errors surface with line numbers and nonzero status
    {
        std::ofstream bad(at("bad.g"));
        bad << "3 1\n0 9\n";
    }
    expect(run(bin() + " bounds " + at("bad.g") + " 2> " + at("err.txt")) != 0,
           "parse error exit code");
    expect(slurp(at("err.txt")).find("line 2") != std::string::npos, "parse error line");

    if (failures == 0) std::cout << "cli e2e: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
