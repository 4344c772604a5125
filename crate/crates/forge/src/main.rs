fn main() {
    println!("tripos-forge");
}
