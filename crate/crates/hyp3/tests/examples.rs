//! Every runnable example completes.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main().unwrap();
            }
        }
    };
}

example!(theta_constants);
example!(symplectic_action);
example!(boundary_cones);
example!(lowest_order_terms);
example!(mann_relations);
example!(shimura_family);
example!(z2z4_family);
