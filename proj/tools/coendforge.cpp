#include "coendforge/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace coendforge;
    CLI::App app{"Coends of finite diagrams, reconstruction of coalgebras, bounded variants over Q_p"};
    CommandOptions opt;
    std::string controls, seeds, probes, out_path, field, functor, coalgebra, transformation, x, y;
    app.add_option("command", opt.command, "validate | cohom | coend | ccoend | bialgebra | hopf | reconstruct | equiv | bcoend | factor")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("spec", opt.spec_path, "spec file (JSON)")->required();
    app.add_option("--functor", functor, "functor name");
    app.add_option("--controls", controls, "comma-separated control objects (default: all)");
    app.add_option("--seeds", seeds, "comma-separated seed comodules (default: all over the coalgebra)");
    app.add_option("--probes", probes, "comma-separated probe comodules for equiv");
    app.add_option("--coalgebra", coalgebra, "coalgebra name");
    app.add_option("--transformation", transformation, "transformation name for factor");
    app.add_option("--x", x, "source object for cohom");
    app.add_option("--y", y, "target object for cohom");
    app.add_option("--field", field, "q | fp:<p> | padic:<p>, overrides the file");
    app.add_option("--out", out_path, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ValidationFailed;
    }
    auto set = [](std::optional<std::string>& dst, const std::string& v) {
        if (!v.empty()) dst = v;
    };
    set(opt.functor, functor);
    set(opt.coalgebra, coalgebra);
    set(opt.transformation, transformation);
    set(opt.x, x);
    set(opt.y, y);
    set(opt.field, field);
    opt.controls = split_commas(controls);
    opt.seeds = split_commas(seeds);
    opt.probes = split_commas(probes);

    const CommandResult r = run_command(opt);
    for (const auto& line : r.report) std::cerr << line << '\n';
    const std::string text = r.output.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << '\n';
            return ValidationFailed;
        }
        out << text;
    }
    return r.exit_code;
}
