// Compares the serial and OpenMP oracle grid verification on the same table.

#include <chrono>
#include <iostream>

#include "csd/ordering.hpp"
#include "csd/verify.hpp"

int main(int argc, char** argv) {
    int degree = argc > 1 ? std::atoi(argv[1]) : 7;
    long grid = argc > 2 ? std::atol(argv[2]) : 6;

    auto t0 = std::chrono::steady_clock::now();
    csd::ExponentTable table = csd::compute_table(degree);
    auto t1 = std::chrono::steady_clock::now();
    std::cout << "table degree " << degree << ": "
              << std::chrono::duration<double>(t1 - t0).count() << " s\n";

    t0 = std::chrono::steady_clock::now();
    auto serial = csd::oracle_grid_check_serial(table, grid, degree);
    t1 = std::chrono::steady_clock::now();
    double serial_s = std::chrono::duration<double>(t1 - t0).count();

    t0 = std::chrono::steady_clock::now();
    auto parallel = csd::oracle_grid_check_parallel(table, grid, degree);
    t1 = std::chrono::steady_clock::now();
    double parallel_s = std::chrono::duration<double>(t1 - t0).count();

    std::cout << "oracle grid " << grid << "x" << grid << " serial:   " << serial_s << " s ("
              << (serial ? *serial : "pass") << ")\n";
    std::cout << "oracle grid " << grid << "x" << grid << " parallel: " << parallel_s << " s ("
              << (parallel ? *parallel : "pass") << ")\n";
    std::cout << "speedup: " << serial_s / parallel_s << "x\n";
    return (serial || parallel) ? 1 : 0;
}
