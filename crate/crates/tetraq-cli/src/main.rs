fn main() {
    println!("tetraq");
}
