fn main() { setfn::cli::main(); }
