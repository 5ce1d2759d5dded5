// Command-line front end; talks to the library only through the C API.
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cacti.h"

namespace {

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad config line (want key=value): " + line);
        out[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return out;
}

struct OptionsHandle {
    cacti_options* o = cacti_options_new();
    ~OptionsHandle() { cacti_options_free(o); }

    bool set(const std::string& key, const std::string& value) {
        return cacti_options_set(o, key.c_str(), value.c_str()) == 0;
    }
};

int emit(int code, char** result) {
    if (*result) {
        std::cout << *result << "\n";
        cacti_free_string(*result);
    }
    if (code != 0) std::cerr << "error: " << cacti_last_error() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts, volumes and generating functions for cacti and "
                 "constellations"};
    app.require_subcommand(1);

    std::string config_path;
    int threads = -1, budget = -1;
    app.add_option("--config", config_path, "key=value defaults (budget, max_degree, threads)");
    app.add_option("--threads", threads, "worker thread cap (0 = all cores)");
    app.add_option("--budget", budget, "time budget in seconds for verification ladders");

    auto* count = app.add_subcommand("count", "count cacti or constellations");
    count->require_subcommand(1);
    std::string passport, sizes, variant = "corrected";
    int genus = 0, faces = 1;

    auto* count_cacti = count->add_subcommand("cacti", "weighted cacti for a passport");
    count_cacti->add_option("--passport", passport, "passport, e.g. \"2,2;3\"")->required();
    count_cacti->add_option("--variant", variant, "printed|corrected");

    auto* count_con = count->add_subcommand("constellations", "oracle count for a passport");
    count_con->add_option("--passport", passport)->required();
    count_con->add_option("--genus", genus)->required();
    count_con->add_option("--faces", faces)->required();

    auto* count_one = count->add_subcommand("one-n", "(1,n)-constellations from polygon sizes");
    count_one->add_option("--sizes", sizes, "comma-separated polygon sizes")->required();

    auto* volume = app.add_subcommand("volume", "gluing-space volume for circles");
    std::string circles;
    bool symbolic = false;
    volume->add_option("--circles", circles, "e.g. \"1:l1,l2;2:s1\"")->required();
    volume->add_option("--genus", genus);
    volume->add_option("--faces", faces);
    volume->add_flag("--symbolic", symbolic, "force polynomial output");

    auto* expand = app.add_subcommand("expand-f", "series of the generating function");
    int max_degree = 2;
    bool with_n = false;
    expand->add_option("--circles", circles)->required();
    expand->add_option("--max-degree", max_degree);
    expand->add_flag("--with-N", with_n, "N-graded series over topological types");

    auto* verify = app.add_subcommand("verify", "run a cross-validation suite");
    std::string suite = "all";
    verify->add_option("--suite", suite,
                       "thm1polyg|thm2polyg|thm3polyg|thm1circ|thm2circ|asymptotic|"
                       "matrixmodel|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OptionsHandle opts;
    try {
        if (!config_path.empty())
            for (const auto& [k, v] : read_config(config_path))
                if (!opts.set(k, v)) return fail_usage("bad config entry: " + k + "=" + v);
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
    if (threads >= 0 && !opts.set("threads", std::to_string(threads)))
        return fail_usage("bad --threads");
    if (budget >= 0 && !opts.set("budget", std::to_string(budget)))
        return fail_usage("bad --budget");

    char* result = nullptr;
    if (count_cacti->parsed()) {
        if (!opts.set("variant", variant)) return fail_usage("unknown variant: " + variant);
        return emit(cacti_count_cacti(opts.o, passport.c_str(), &result), &result);
    }
    if (count_con->parsed()) {
        opts.set("genus", std::to_string(genus));
        opts.set("faces", std::to_string(faces));
        return emit(cacti_count_constellations(opts.o, passport.c_str(), &result), &result);
    }
    if (count_one->parsed())
        return emit(cacti_count_one_n(opts.o, sizes.c_str(), &result), &result);
    if (volume->parsed()) {
        opts.set("genus", std::to_string(genus));
        opts.set("faces", std::to_string(faces));
        opts.set("symbolic", symbolic ? "1" : "0");
        return emit(cacti_volume(opts.o, circles.c_str(), &result), &result);
    }
    if (expand->parsed()) {
        opts.set("max_degree", std::to_string(max_degree));
        opts.set("with_n", with_n ? "1" : "0");
        return emit(cacti_expand_f(opts.o, circles.c_str(), &result), &result);
    }
    if (verify->parsed()) return emit(cacti_verify(opts.o, suite.c_str(), &result), &result);
    return fail_usage("no subcommand");
}
