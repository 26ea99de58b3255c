fn main() {
    println!("qteich");
}
