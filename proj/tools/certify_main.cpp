#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "drincert/certify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Galois-image certification for the rank-3 Drinfeld module family"};
    app.name("certify");

    drincert::CertifyConfig cfg;
    std::string out_file;
    app.add_option("--q", cfg.q, "field size q = p^e (odd prime power, >= 7)")->required();
    app.add_option("--ext-modulus", cfg.ext_modulus,
                   "defining polynomial of F_q over F_p in the variable u (default: least monic irreducible)");
    app.add_option("--g1", cfg.g1_text, "family parameter g1 as a polynomial in T")->required();
    app.add_option("--g2", cfg.g2_text, "family parameter g2 as a polynomial in T")->required();
    app.add_option("--max-deg", cfg.opt.max_deg, "certify primes l up to this degree")
        ->default_val(3);
    app.add_option("--pair-max-deg", cfg.opt.pair_max_deg, "pair certificates up to this degree")
        ->default_val(2);
    app.add_option("--scan-cap", cfg.opt.scan_cap,
                   "degree cap of the irreducibility scan (larger l are refused)")
        ->default_val(3);
    app.add_flag("--pairs", cfg.opt.pairs, "also emit pairwise l1,l2 certificates");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    app.add_option("--out", out_file, "write the report to a file instead of stdout");
    app.add_flag("--allow-small-q", cfg.opt.allow_small_q,
                 "run checks for q < 7 and mark every verdict out-of-scope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        drincert::Report rep = drincert::run_report(cfg);
        std::string payload = cfg.format == "json" ? rep.doc.dump(2) + "\n" : rep.text;
        if (!out_file.empty()) {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open output file: " << out_file << "\n";
                return 2;
            }
            f << payload;
        } else {
            std::cout << payload;
        }
        return rep.all_surjective ? 0 : 1;
    } catch (const drincert::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
