// Compares the serial reference path of the audit executor against the
// OpenMP-parallel path and checks that both produce the identical report.

#include <chrono>
#include <iostream>

#include "qkernel/audit.hpp"
#include "qkernel/padic.hpp"

using namespace qkernel;

namespace {

double run_timed(const AuditConfig& cfg, std::string& rendered) {
    auto t0 = std::chrono::steady_clock::now();
    AuditReport r = run_audit(cfg);
    auto t1 = std::chrono::steady_clock::now();
    rendered = report_to_json(r);
    return std::chrono::duration<double>(t1 - t0).count();
}

double probe_timed() {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 0; n <= 4; ++n) convergence_probe(n, QSeed{3, 4}, 5, 12);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n_max = argc > 1 ? std::atoi(argv[1]) : 6;

    AuditConfig serial;
    serial.n_max = n_max;
    serial.threads = 1;
    AuditConfig parallel = serial;
    parallel.threads = 0; // all cores

    std::string serial_out, parallel_out;
    double ts = run_timed(serial, serial_out);
    double tp = run_timed(parallel, parallel_out);

    std::cout << "audit n_max=" << n_max << "\n";
    std::cout << "  serial reference: " << ts << " s\n";
    std::cout << "  parallel (" << resolve_threads(0) << " threads): " << tp << " s\n";
    std::cout << "  speedup: " << (tp > 0 ? ts / tp : 0.0) << "x\n";
    std::cout << "  reports identical: " << (serial_out == parallel_out ? "yes" : "NO") << "\n";

    double tprobe = probe_timed();
    std::cout << "padic probe (moments 0..4, N<=5): " << tprobe << " s\n";

    return serial_out == parallel_out ? 0 : 1;
}
