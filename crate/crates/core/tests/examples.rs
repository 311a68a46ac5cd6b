// Every example must run to completion.

mod tutte_eval {
    include!("../examples/tutte_eval.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod ising_spectrum {
    include!("../examples/ising_spectrum.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod duality {
    include!("../examples/duality.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod gadgets {
    include!("../examples/gadgets.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod hypergraph_reduction {
    include!("../examples/hypergraph_reduction.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod weight_shift {
    include!("../examples/weight_shift.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod codes_groups {
    include!("../examples/codes_groups.rs");

    #[test]
    fn runs() {
        main();
    }
}

mod cli_tour {
    include!("../examples/cli_tour.rs");

    #[test]
    fn runs() {
        main();
    }
}
