use ndarray::Array2;
use ndarray_linalg::Eigvalsh;

fn main() {
    let n = 810;
    let mut a = Array2::<f64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let v = ((i * 31 + j * 17) % 97) as f64 / 97.0;
            a[[i, j]] = v;
        }
    }
    let a = (&a + &a.t()) / 2.0;
    let t = std::time::Instant::now();
    let vals = a.eigvalsh(ndarray_linalg::UPLO::Lower).unwrap();
    println!("n={} eigvalsh took {:?}, lambda_min={:.4}", n, t.elapsed(), vals[0]);
}
