fn main() {
    let out = dyck_tilings::cli::main_with_args(std::env::args_os());
    if out.status == 0 {
        print!("{}", out.text);
    } else {
        eprint!("{}", out.text);
    }
    std::process::exit(out.status);
}
